//! Acceptance suite: one test per exit criterion, each printing a single
//! PASS/FAIL line with its measured runtime.

use std::time::{Duration, Instant};

use hyperlab::harness::{
    verify_clique_stability, verify_clique_theorem, verify_extension_preservation, verify_lemma_rectangular,
    verify_oracle_equivalence, verify_sparse_construction, ExtensionMode, VerificationReport,
};
use hyperlab::{build_sigma_hypergraph, sigma_edge_count, Partition, Solver};

fn report_line(criterion: &str, ok: bool, elapsed: Duration, limit: Duration, detail: &str) {
    println!(
        "[{}] criterion {criterion}: {detail} ({:.3}s, limit {}s)",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        limit.as_secs()
    );
}

fn conclude(criterion: &str, reports: &[VerificationReport], elapsed: Duration, limit: Duration, detail: &str) {
    let pass = reports.iter().all(|r| r.pass);
    let ok = pass && elapsed < limit;
    report_line(criterion, ok, elapsed, limit, detail);
    for r in reports {
        for f in &r.failures {
            println!(
                "    {}: observed {}, expected {} | {}",
                f.instance, f.observed, f.expected, f.params
            );
        }
    }
    assert!(pass, "criterion {criterion}: verification failures");
    assert!(elapsed < limit, "criterion {criterion}: {elapsed:?} exceeds {limit:?}");
}

#[test]
fn criterion_1_symmetric_iff_rectangular() {
    let started = Instant::now();
    let report = verify_lemma_rectangular(12).unwrap();
    let elapsed = started.elapsed();
    // 1+2+3+5+7+11+15+22+30+42+56+77 partitions of r = 1..=12
    assert_eq!(report.instances, 271);
    conclude(
        "1",
        &[report],
        elapsed,
        Duration::from_secs(1),
        "symmetric == rectangular over all 271 partitions of r <= 12",
    );
}

#[test]
fn criterion_2_sigma_clique_characterisation() {
    let solver = Solver::default();
    let started = Instant::now();
    let report = verify_clique_theorem(&solver, &[3, 4], 12, 12).unwrap();
    let elapsed = started.elapsed();
    let detail = format!(
        "(r+1)/(r+2)-clique characterisation over {} sigma-hypergraphs, r in {{3,4}}, nq <= 12",
        report.instances
    );
    assert!(report.instances > 0);
    conclude("2", &[report], elapsed, Duration::from_secs(30), &detail);
}

#[test]
fn criterion_3_sparse_sigma_hypergraphs() {
    let solver = Solver::default();
    let started = Instant::now();
    let reports: Vec<_> = [1, 2]
        .into_iter()
        .map(|t| verify_sparse_construction(&solver, t, 4).unwrap())
        .collect();

    // exact values, zero tolerance
    let sigma = Partition::parse(&[3, 1]).unwrap();
    for (t, chi_expected, edges_expected) in [(1usize, 2usize, 6usize), (2, 3, 300)] {
        let (n, q) = (t + 1, 2 * t + 1);
        let (h, _) = build_sigma_hypergraph(n, 4, q, &sigma).unwrap();
        assert_eq!(h.edge_count(), edges_expected);
        assert_eq!(sigma_edge_count(n, q, &sigma).unwrap(), edges_expected as u128);
        assert_eq!(solver.chromatic_number(&h).unwrap().0, chi_expected);
        assert!(solver.clique_number(&h).unwrap().0 <= 4);
        assert!(solver.ab_colourable(&h, n, 2, 2).unwrap().is_some());
    }
    let elapsed = started.elapsed();
    conclude(
        "3",
        &reports,
        elapsed,
        Duration::from_secs(60),
        "H(t+1,4,2t+1|(3,1)): chi = 2, 3; edges = 6, 300; omega <= 4; n in (2,2)-spectrum",
    );
}

#[test]
fn criterion_4_extensions_preserve_chi_and_spectrum() {
    let solver = Solver::default();
    let started = Instant::now();
    let report = verify_extension_preservation(&solver, 100, 7, ExtensionMode::Both).unwrap();
    let elapsed = started.elapsed();
    assert_eq!(report.instances, 100);
    conclude(
        "4",
        &[report],
        elapsed,
        Duration::from_secs(300),
        "100/100 seeded (H, params): chi and (2,2)-spectrum preserved, colouring rules valid",
    );
}

#[test]
fn criterion_5_star_extension_clique_stability() {
    let solver = Solver::default();
    let started = Instant::now();
    let report = verify_clique_stability(&solver, 50, 7, 3).unwrap();
    let elapsed = started.elapsed();
    assert_eq!(report.instances, 50);
    conclude(
        "5",
        &[report],
        elapsed,
        Duration::from_secs(120),
        "50 seeded instances: omega = max(omega(H), r+t) fixed over 3 star extensions, chi unchanged",
    );
}

#[test]
fn criterion_6_oracle_equivalence() {
    let solver = Solver::default();
    let started = Instant::now();
    let report = verify_oracle_equivalence(&solver, 200, 7).unwrap();
    let elapsed = started.elapsed();
    assert_eq!(report.instances, 200);
    conclude(
        "6",
        &[report],
        elapsed,
        Duration::from_secs(300),
        "ab_spectrum == oracle_spectrum on 200 seeded hypergraphs, (2,2), (2,r), (2,3)",
    );
}

#[test]
fn criterion_7_large_scale_claims_by_substitute() {
    // The asymptotic claims are exercised through the formula-vs-enumeration
    // identity at small t and the preservation suites (criteria 3 to 5).
    let started = Instant::now();
    let sigma5 = Partition::parse(&[4, 1]).unwrap();
    let (h, _) = build_sigma_hypergraph(2, 5, 4, &sigma5).unwrap();
    // t = 1, r = 5: 1*2*4*C(4,4) = 8
    assert_eq!(h.edge_count(), 8);
    let report = verify_sparse_construction(&Solver::default(), 1, 5).unwrap();
    let elapsed = started.elapsed();
    conclude(
        "7",
        &[report],
        elapsed,
        Duration::from_secs(60),
        "large-scale claims covered by small-t formula identity and criteria 3-5",
    );
}
