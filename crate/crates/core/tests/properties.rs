use hyperlab::harness::{extension_instance, instance_seeds, random_hypergraph, star_instance};
use hyperlab::io::{from_json, to_json};
use hyperlab::{
    ab_spectrum, check_ab, check_classical, chromatic_number, clique_number, enumerate_partitions, extend_22_colouring,
    extend_classical_colouring, extend_pq, iterate_star, oracle_spectrum, star_extend, EdgeRule, Hypergraph, VertexSet,
};
use itertools::Itertools;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_hypergraph() -> impl Strategy<Value = Hypergraph> {
    (3usize..=4, any::<u64>()).prop_map(|(r, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_hypergraph(&mut rng, r)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn clique_predicate_matches_enumeration(h in arb_hypergraph(), pick in proptest::collection::vec(0usize..8, 0..8)) {
        let s = VertexSet::new(pick.into_iter().filter(|&v| v < h.vertex_count()));
        let direct = s.len() < h.r()
            || s.members().iter().copied().combinations(h.r()).all(|k| h.is_edge(&VertexSet::new(k)));
        prop_assert_eq!(h.is_clique(&s), direct);
    }

    #[test]
    fn induced_subhypergraph_invariants(h in arb_hypergraph(), pick in proptest::collection::vec(0usize..8, 0..8)) {
        let s = VertexSet::new(pick.into_iter().filter(|&v| v < h.vertex_count()));
        let sub = h.induced_subhypergraph(&s);
        prop_assert_eq!(sub.r(), h.r());
        prop_assert_eq!(sub.vertex_count(), s.len());
        prop_assert!(sub.edge_count() <= h.edge_count());
        // chromatic number never grows on an induced subhypergraph
        if sub.vertex_count() > 0 {
            prop_assert!(chromatic_number(&sub).unwrap().0 <= chromatic_number(&h).unwrap().0);
        }
    }

    #[test]
    fn json_round_trip(h in arb_hypergraph()) {
        let text = to_json(&h, None);
        let back = from_json(&text, "mem").unwrap();
        prop_assert_eq!(&back.hypergraph, &h);
        prop_assert_eq!(to_json(&back.hypergraph, None), text);
    }

    #[test]
    fn adding_edges_never_lowers_chi(h in arb_hypergraph(), extra in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(extra);
        let more = random_hypergraph(&mut rng, h.r());
        let mut edges: Vec<Vec<usize>> = h.edges().to_vec();
        edges.extend(more.edges().iter().filter(|e| e.iter().all(|&v| v < h.vertex_count())).cloned());
        let bigger = Hypergraph::new(h.r(), h.vertex_count(), edges).unwrap();
        prop_assert!(chromatic_number(&h).unwrap().0 <= chromatic_number(&bigger).unwrap().0);
    }

    #[test]
    fn spectra_are_sound_and_match_oracle(h in arb_hypergraph()) {
        for (a, b) in [(2, 2), (2, h.r()), (1, 2)] {
            let s = ab_spectrum(&h, a, b).unwrap();
            for (&k, c) in &s.witnesses {
                prop_assert!(check_ab(&h, c, a, b).unwrap());
                prop_assert_eq!(c.k(), k);
            }
            prop_assert_eq!(s.lower(), s.feasible.first().copied());
            prop_assert_eq!(&s, &oracle_spectrum(&h, a, b).unwrap());
        }
        let (chi, c) = chromatic_number(&h).unwrap();
        prop_assert!(check_classical(&h, &c).unwrap());
        prop_assert_eq!(ab_spectrum(&h, 2, h.r()).unwrap().lower(), Some(chi));
    }

    #[test]
    fn clique_number_at_least_r(h in arb_hypergraph()) {
        let (omega, w) = clique_number(&h).unwrap();
        prop_assert!(omega >= h.r());
        prop_assert_eq!(w.len(), omega);
        prop_assert!(h.is_clique(&w));
        // nothing larger: no candidate of size omega + 1 is a clique
        prop_assert!(!(0..h.vertex_count()).combinations(omega + 1).any(|s| h.is_clique(&VertexSet::new(s))));
    }

    #[test]
    fn extensions_preserve_chi_and_spectrum(seed in any::<u64>()) {
        let (h, params) = extension_instance(seed);
        let ext = extend_pq(&h, &params).unwrap();
        prop_assert!(h.edges().iter().all(|e| ext.is_edge(&VertexSet::new(e.clone()))));
        let (chi, witness) = chromatic_number(&h).unwrap();
        prop_assert_eq!(chromatic_number(&ext).unwrap().0, chi);
        let lifted = extend_classical_colouring(&h, &params, &witness).unwrap();
        prop_assert!(check_classical(&ext, &lifted).unwrap());

        let spec = ab_spectrum(&h, 2, 2).unwrap();
        prop_assert_eq!(&spec.feasible, &ab_spectrum(&ext, 2, 2).unwrap().feasible);
        for c in spec.witnesses.values() {
            let lifted = extend_22_colouring(&h, &params, c).unwrap();
            prop_assert!(check_ab(&ext, &lifted, 2, 2).unwrap());
        }
    }

    #[test]
    fn star_extension_clique_number(seed in any::<u64>()) {
        let (h, t, _) = star_instance(seed);
        let (omega, _) = clique_number(&h).unwrap();
        for e in 0..h.edge_count().min(3) {
            let ext = star_extend(&h, e, t).unwrap();
            prop_assert_eq!(clique_number(&ext).unwrap().0, omega.max(h.r() + t));
        }
    }

    #[test]
    fn iterate_star_adds_t_vertices_per_step(seed in any::<u64>(), steps in 0usize..4) {
        let (h, t, rule_seed) = star_instance(seed);
        let g = iterate_star(&h, t, steps, EdgeRule::Random(rule_seed)).unwrap();
        prop_assert_eq!(g.vertex_count(), h.vertex_count() + steps * t);
        prop_assert_eq!(g.provenance().len(), h.provenance().len() + steps);
    }
}

#[test]
fn delete_one_totals() {
    for r in 1..=10 {
        for sigma in enumerate_partitions(r).unwrap() {
            for i in 1..=sigma.s() {
                match sigma.delete_one(i).unwrap() {
                    Some(d) => assert_eq!(d.total(), r - 1),
                    None => assert_eq!(r, 1),
                }
            }
        }
    }
}

#[test]
fn seeded_corpus_exercises_type2_edges_and_nonempty_spectra() {
    let seeds = instance_seeds(7, 100);
    let mut with_u = 0;
    let mut colourable = 0;
    for &s in &seeds {
        let (h, params) = extension_instance(s);
        if params.q_ext > 0 {
            with_u += 1;
        }
        if !ab_spectrum(&h, 2, 2).unwrap().feasible.is_empty() {
            colourable += 1;
        }
    }
    assert!(with_u >= 50, "only {with_u} instances with U");
    assert!(colourable >= 20, "only {colourable} (2,2)-colourable bases");
}
