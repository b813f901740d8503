use hyperlab::harness::{
    render_reports, verify_clique_theorem, verify_extension_preservation, verify_lemma_rectangular,
    verify_sparse_construction, ExtensionMode, Format, CSV_HEADER,
};
use hyperlab::{
    ab_colourable, ab_spectrum, build_sigma_hypergraph, chromatic_number, clique_number, iterate_star, star_extend,
    EdgeRule, Hypergraph, Partition, Solver, VertexSet,
};

fn sigma(parts: &[i64]) -> Partition {
    Partition::parse(parts).unwrap()
}

#[test]
fn near_rectangular_sigma_has_r_plus_one_clique() {
    let (h, _) = build_sigma_hypergraph(2, 3, 2, &sigma(&[2, 1])).unwrap();
    assert!(h.is_clique(&VertexSet::new(0..4)));
    assert_eq!(clique_number(&h).unwrap().0, 4);
}

#[test]
fn sparse_sigma_chromatic_numbers() {
    let (h, _) = build_sigma_hypergraph(2, 4, 3, &sigma(&[3, 1])).unwrap();
    assert_eq!(chromatic_number(&h).unwrap().0, 2);
    assert_eq!(clique_number(&h).unwrap().0, 4);
    let (h, _) = build_sigma_hypergraph(3, 4, 5, &sigma(&[3, 1])).unwrap();
    assert_eq!(h.edge_count(), 300);
    assert_eq!(chromatic_number(&h).unwrap().0, 3);
}

#[test]
fn classes_coloured_monochromatically() {
    for (n, r, q, parts) in [(3, 4, 3, vec![3, 1]), (4, 3, 2, vec![2, 1]), (3, 4, 2, vec![2, 2])] {
        let (h, meta) = build_sigma_hypergraph(n, r, q, &sigma(&parts)).unwrap();
        let w = ab_colourable(&h, n, 2, 2).unwrap().expect("class colouring exists");
        assert_eq!(w.k(), n);
        let by_class: Vec<usize> = (0..h.vertex_count()).map(|v| meta.class_of(v) + 1).collect();
        assert!(hyperlab::check_ab(&h, &by_class.into(), 2, 2).unwrap());
    }
}

#[test]
fn star_extension_keeps_spectrum_of_single_edge() {
    let single = Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap();
    let k4 = star_extend(&single, 0, 1).unwrap();
    assert_eq!(ab_spectrum(&single, 2, 2).unwrap().feasible, vec![2]);
    assert_eq!(ab_spectrum(&k4, 2, 2).unwrap().feasible, vec![2]);
    assert_eq!(clique_number(&k4).unwrap().0, 4);
}

#[test]
fn repeated_star_on_sparse_sigma() {
    let (h, _) = build_sigma_hypergraph(2, 4, 3, &sigma(&[3, 1])).unwrap();
    assert_eq!(clique_number(&h).unwrap().0, 4);
    for steps in 1..=3 {
        let g = iterate_star(&h, 1, steps, EdgeRule::First).unwrap();
        assert_eq!(clique_number(&g).unwrap().0, 5, "steps = {steps}");
        assert_eq!(chromatic_number(&g).unwrap().0, 2, "steps = {steps}");
    }
    assert_eq!(iterate_star(&h, 1, 0, EdgeRule::First).unwrap(), h);
}

#[test]
fn clique_theorem_instances() {
    let (h, _) = build_sigma_hypergraph(2, 3, 2, &sigma(&[2, 1])).unwrap();
    assert_eq!(clique_number(&h).unwrap().0, 4);
    let (h, _) = build_sigma_hypergraph(5, 3, 1, &sigma(&[1, 1, 1])).unwrap();
    assert_eq!(clique_number(&h).unwrap().0, 5);
    let (h, _) = build_sigma_hypergraph(3, 4, 3, &sigma(&[2, 2])).unwrap();
    assert_eq!(clique_number(&h).unwrap().0, 4);
}

#[test]
fn report_examples() {
    let solver = Solver::default();
    let lemma = verify_lemma_rectangular(6).unwrap();
    assert!(lemma.pass && lemma.instances == 29);
    assert!(verify_lemma_rectangular(12).unwrap().pass);

    let r = verify_sparse_construction(&solver, 1, 5).unwrap();
    assert!(r.pass, "{:?}", r.failures);
    assert!(verify_clique_theorem(&solver, &[3], 6, 6).unwrap().pass);

    let a = verify_extension_preservation(&solver, 10, 3, ExtensionMode::Both).unwrap();
    let b = verify_extension_preservation(&solver, 10, 3, ExtensionMode::Both).unwrap();
    assert_eq!((a.instances, a.failures), (b.instances, b.failures));
}

#[test]
fn report_schemas_are_stable() {
    let solver = Solver::default();
    let mut reports = vec![
        verify_lemma_rectangular(3).unwrap(),
        verify_sparse_construction(&solver, 1, 4).unwrap(),
    ];
    for r in &mut reports {
        r.elapsed = std::time::Duration::from_millis(1500);
    }
    let csv = render_reports(&reports, Format::Csv);
    assert_eq!(
        csv,
        format!("{CSV_HEADER}\nsymmetric-partition,6,0,true,1.500\nsparse-sigma,1,0,true,1.500\n")
    );
    let json = render_reports(&reports[..1], Format::Json);
    assert_eq!(
        json,
        "[\n  {\n    \"theorem\": \"symmetric-partition\",\n    \"instances\": 6,\n    \"failures\": [],\n    \"elapsed\": 1.5,\n    \"pass\": true\n  }\n]\n"
    );
    let table = render_reports(&reports, Format::Table);
    assert!(table.lines().next().unwrap().starts_with("suite"));
    assert!(table.contains("PASS"));
}
