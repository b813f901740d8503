//! Seeded verification suites for the colouring, spectrum and clique results
//! on sigma-hypergraphs and extensions.
//!
//! Every randomized suite derives one seed per instance from the master seed,
//! so a counterexample can be replayed from `(instance_seed)` alone.

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::{Duration, Instant};

use itertools::Itertools;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::constructors::{
    build_sigma, build_sigma_hypergraph, extend_22_colouring, extend_classical_colouring, extend_pq, sigma_edge_count,
    star_extend, ConstructError, ExtensionParams,
};
use crate::hypergraph::Hypergraph;
use crate::partitions::{enumerate_partitions, Partition};
use crate::solvers::{check_ab, check_classical, Solver, DEFAULT_SEARCH_GUARD};
use crate::Error;

/// Largest vertex count a clique-theorem instance may have.
pub const CLIQUE_INSTANCE_VERTEX_CAP: usize = 12;
/// Largest vertex count for the sparse sigma-hypergraph check.
pub const SPARSE_VERTEX_CAP: usize = 16;
/// Largest base vertex count of random instances.
pub const RANDOM_BASE_VERTEX_CAP: usize = 8;

/// The verification suites, with their numbered aliases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Suite {
    /// A partition is symmetric iff it is rectangular.
    SymmetricPartition,
    /// (r+1)- and (r+2)-cliques of sigma-hypergraphs.
    SigmaClique,
    /// The sparse (r-1,1) sigma-hypergraphs with chromatic number t+1.
    SparseSigma,
    /// (p,q)-extensions preserve the chromatic number.
    ExtensionChromatic,
    /// (p,q)-extensions preserve the (2,2)-spectrum.
    ExtensionSpectrum,
    /// Clique number under repeated t-star extension.
    StarClique,
    /// Pruned spectrum solver against the exhaustive oracle.
    OracleEquivalence,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::SymmetricPartition,
        Suite::SigmaClique,
        Suite::SparseSigma,
        Suite::ExtensionChromatic,
        Suite::ExtensionSpectrum,
        Suite::StarClique,
        Suite::OracleEquivalence,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Suite::SymmetricPartition => "symmetric-partition",
            Suite::SigmaClique => "sigma-clique",
            Suite::SparseSigma => "sparse-sigma",
            Suite::ExtensionChromatic => "extension-chromatic",
            Suite::ExtensionSpectrum => "extension-spectrum",
            Suite::StarClique => "star-clique",
            Suite::OracleEquivalence => "oracle-equivalence",
        }
    }

    pub fn alias(self) -> Option<&'static str> {
        match self {
            Suite::SymmetricPartition => Some("lemma-3.1"),
            Suite::SigmaClique => Some("thm-3.2"),
            Suite::SparseSigma => Some("thm-3.5"),
            Suite::ExtensionChromatic => Some("thm-2.1"),
            Suite::ExtensionSpectrum => Some("thm-2.2"),
            Suite::StarClique => Some("prop-4.3"),
            Suite::OracleEquivalence => None,
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.id() == s || x.alias() == Some(s))
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// One failed instance, with everything needed to rebuild it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub instance: String,
    pub params: serde_json::Value,
    pub observed: String,
    pub expected: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub instances: usize,
    pub failures: Vec<Counterexample>,
    #[serde(with = "seconds")]
    pub elapsed: Duration,
    pub pass: bool,
}

mod seconds {
    use std::time::Duration;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(d.as_secs_f64())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        Ok(Duration::from_secs_f64(f64::deserialize(d)?))
    }
}

impl VerificationReport {
    fn finish(suite: Suite, instances: usize, mut failures: Vec<Counterexample>, started: Instant) -> Self {
        failures.sort_by(|a, b| a.instance.cmp(&b.instance));
        VerificationReport {
            theorem: suite.id().to_string(),
            instances,
            pass: failures.is_empty(),
            failures,
            elapsed: started.elapsed(),
        }
    }
}

/// Output format for reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "table" => Ok(Format::Table),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(format!("unknown format {s:?}")),
        }
    }
}

pub const CSV_HEADER: &str = "theorem,instances,failures,pass,elapsed_seconds";

pub fn render_reports(reports: &[VerificationReport], format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = format!("{CSV_HEADER}\n");
            for r in reports {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{:.3}",
                    r.theorem,
                    r.instances,
                    r.failures.len(),
                    r.pass,
                    r.elapsed.as_secs_f64()
                );
            }
            s
        }
        Format::Table => {
            let mut s = format!(
                "{:<22} {:>9} {:>8} {:>6} {:>10}\n",
                "suite", "instances", "failures", "pass", "seconds"
            );
            for r in reports {
                let _ = writeln!(
                    s,
                    "{:<22} {:>9} {:>8} {:>6} {:>10.3}",
                    r.theorem,
                    r.instances,
                    r.failures.len(),
                    if r.pass { "PASS" } else { "FAIL" },
                    r.elapsed.as_secs_f64()
                );
                for f in &r.failures {
                    let _ = writeln!(
                        s,
                        "    {}: observed {}, expected {} | {}",
                        f.instance, f.observed, f.expected, f.params
                    );
                }
            }
            s
        }
    }
}

/// Checks `is_symmetric == is_rectangular` for every partition of every `r <= r_max`.
pub fn verify_lemma_rectangular(r_max: usize) -> Result<VerificationReport, Error> {
    let started = Instant::now();
    let mut instances = 0;
    let mut failures = Vec::new();
    for r in 1..=r_max {
        for sigma in enumerate_partitions(r)? {
            instances += 1;
            let (sym, rect) = (sigma.is_symmetric(), sigma.is_rectangular());
            if sym != rect {
                failures.push(Counterexample {
                    instance: format!("r={r:02} sigma={sigma}"),
                    params: json!({ "sigma": sigma.parts() }),
                    observed: format!("symmetric={sym}"),
                    expected: format!("symmetric={rect} (rectangular)"),
                });
            }
        }
    }
    Ok(VerificationReport::finish(
        Suite::SymmetricPartition,
        instances,
        failures,
        started,
    ))
}

/// Exhaustive clique checks on `H(n, r, q | sigma)` for every sigma of every
/// `r` in `r_set`, `n <= n_max`, `q <= q_max`, `n*q <= 12`.
///
/// An (r+1)-clique needs `sigma = (D,...,D,D-1)`, and the classes must be able
/// to host the rectangular `(D,...,D)` it comes from: at least that many
/// classes and `q >= D`.
pub fn verify_clique_theorem(
    solver: &Solver,
    r_set: &[usize],
    n_max: usize,
    q_max: usize,
) -> Result<VerificationReport, Error> {
    let started = Instant::now();
    let mut cases = Vec::new();
    for &r in r_set {
        for sigma in enumerate_partitions(r)? {
            for n in sigma.s()..=n_max {
                for q in 1..=q_max {
                    if n * q <= CLIQUE_INSTANCE_VERTEX_CAP {
                        cases.push((r, sigma.clone(), n, q));
                    }
                }
            }
        }
    }
    let results: Vec<Vec<Counterexample>> = cases
        .par_iter()
        .map(|(r, sigma, n, q)| clique_case(solver, *r, sigma, *n, *q))
        .collect::<Result<_, Error>>()?;
    Ok(VerificationReport::finish(
        Suite::SigmaClique,
        cases.len(),
        results.into_iter().flatten().collect(),
        started,
    ))
}

fn clique_case(solver: &Solver, r: usize, sigma: &Partition, n: usize, q: usize) -> Result<Vec<Counterexample>, Error> {
    let (h, _) = build_sigma(n, r, q, sigma, DEFAULT_SEARCH_GUARD, false)?;
    let (omega, witness) = solver.clique_number(&h)?;
    let key = format!("r={r} sigma={sigma} n={n:02} q={q:02}");
    let params =
        json!({ "r": r, "sigma": sigma.parts(), "n": n, "q": q, "omega": omega, "witness": witness.members() });
    let mut out = Vec::new();
    let mut check = |what: &str, observed: String, expected: String| {
        if observed != expected {
            out.push(Counterexample {
                instance: format!("{key} {what}"),
                params: params.clone(),
                observed,
                expected,
            });
        }
    };
    check("witness", h.is_clique(&witness).to_string(), "true".into());

    let hosted = sigma
        .rectangular_parent()
        .is_some_and(|parent| n >= parent.s() && q >= parent.largest());
    check("(r+1)-clique", (omega > r).to_string(), hosted.to_string());

    let all_ones = sigma.parts().iter().all(|&a| a == 1);
    let degenerate = (sigma.s() == 1 && q >= r + 2) || (all_ones && n >= r + 2);
    check("(r+2)-clique", (omega > r + 1).to_string(), degenerate.to_string());

    if sigma.s() == 1 && q >= r {
        check("class clique", omega.to_string(), q.to_string());
    }
    if all_ones && n >= r {
        check("transversal clique", omega.to_string(), n.to_string());
    }
    Ok(out)
}

/// Checks the sparse `H(t+1, r, (r-2)t+1 | (r-1,1))`: (2,2)-colourable with
/// `t+1` colours, chromatic number `t+1`, no (r+1)-clique, and the closed-form
/// edge count.
pub fn verify_sparse_construction(solver: &Solver, t: usize, r: usize) -> Result<VerificationReport, Error> {
    let started = Instant::now();
    let n = t + 1;
    let q = (r - 2) * t + 1;
    if t == 0 || r < 4 {
        return Err(Error::Usage(format!("need t >= 1 and r >= 4, got t = {t}, r = {r}")));
    }
    if n * q > SPARSE_VERTEX_CAP {
        return Err(ConstructError::SizeGuardExceeded {
            vertices: n * q,
            guard: SPARSE_VERTEX_CAP,
        }
        .into());
    }
    let sigma = Partition::from_parts(vec![r - 1, 1]);
    let (h, _) = build_sigma_hypergraph(n, r, q, &sigma)?;
    let params = json!({ "t": t, "r": r, "n": n, "q": q, "sigma": sigma.parts() });
    let mut failures = Vec::new();
    let mut check = |what: &str, observed: String, expected: String| {
        if observed != expected {
            failures.push(Counterexample {
                instance: format!("t={t} r={r} {what}"),
                params: params.clone(),
                observed,
                expected,
            });
        }
    };

    let colouring = solver.ab_colourable(&h, n, 2, 2)?;
    let valid = match &colouring {
        Some(c) => check_ab(&h, c, 2, 2)? && c.k() == n,
        None => false,
    };
    check("(2,2) with n colours", valid.to_string(), "true".into());

    let (chi, witness) = solver.chromatic_number(&h)?;
    check("chromatic number", chi.to_string(), (t + 1).to_string());
    check(
        "chromatic witness",
        check_classical(&h, &witness)?.to_string(),
        "true".into(),
    );
    let bound = ((h.vertex_count() as f64) / ((r - 2) as f64)).sqrt();
    check("sqrt bound", ((chi as f64) >= bound).to_string(), "true".into());

    let (omega, _) = solver.clique_number(&h)?;
    check("clique number <= r", (omega <= r).to_string(), "true".into());

    let formula = t as u128 * (t as u128 + 1) * q as u128 * binomial(q, r - 1);
    check("edge count formula", h.edge_count().to_string(), formula.to_string());
    check(
        "edge count general",
        sigma_edge_count(n, q, &sigma)?.to_string(),
        formula.to_string(),
    );

    Ok(VerificationReport::finish(Suite::SparseSigma, 1, failures, started))
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k as u128).fold(1, |acc, i| acc * (n as u128 - i) / (i + 1))
}

/// Per-instance seeds drawn from the master seed.
pub fn instance_seeds(seed: u64, trials: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials).map(|_| rng.random()).collect()
}

/// Random r-uniform hypergraph on `r..=8` vertices with edge density drawn
/// from {0.2, 0.5, 0.8}; edgeless draws are rejected.
pub fn random_hypergraph(rng: &mut impl Rng, r: usize) -> Hypergraph {
    loop {
        let n = rng.random_range(r..=RANDOM_BASE_VERTEX_CAP);
        let density = *[0.2, 0.5, 0.8].choose(rng).expect("non-empty");
        let edges: Vec<Vec<usize>> = (0..n).combinations(r).filter(|_| rng.random_bool(density)).collect();
        if !edges.is_empty() {
            return Hypergraph::new(r, n, edges)
                .expect("generated edges are valid")
                .with_provenance(format!("random n={n} r={r} density={density}"));
        }
    }
}

fn random_subset(rng: &mut impl Rng, max: usize) -> Vec<usize> {
    loop {
        let s: Vec<usize> = (1..=max).filter(|_| rng.random_bool(0.5)).collect();
        if !s.is_empty() {
            return s;
        }
    }
}

/// Random valid extension parameters with `p, q_ext <= 3`.
pub fn random_extension_params(rng: &mut impl Rng, h: &Hypergraph) -> ExtensionParams {
    let r = h.r();
    let edge_index = rng.random_range(0..h.edge_count());
    let p = rng.random_range(1..=3);
    let q_ext = rng.random_range(0..=3);
    let t = random_subset(rng, p.min((r - 1) / 2));
    if q_ext == 0 {
        return ExtensionParams::new(edge_index, p, 0, t, [], []);
    }
    loop {
        let ps = random_subset(rng, p.min(r - 2));
        let qs = random_subset(rng, q_ext.min(r - 2));
        if ps[0] + qs[0] < r {
            return ExtensionParams::new(edge_index, p, q_ext, t, ps, qs);
        }
    }
}

/// Rebuilds the base hypergraph and parameters of an extension instance.
pub fn extension_instance(instance_seed: u64) -> (Hypergraph, ExtensionParams) {
    let mut rng = ChaCha8Rng::seed_from_u64(instance_seed);
    let r = rng.random_range(3..=5);
    let h = random_hypergraph(&mut rng, r);
    let params = random_extension_params(&mut rng, &h);
    (h, params)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtensionMode {
    Classical,
    Spectrum22,
    Both,
}

impl FromStr for ExtensionMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "classical" => Ok(ExtensionMode::Classical),
            "spectrum22" => Ok(ExtensionMode::Spectrum22),
            "both" => Ok(ExtensionMode::Both),
            _ => Err(format!("unknown mode {s:?}")),
        }
    }
}

/// Random (H, params) pairs: chromatic number and/or (2,2)-spectrum must be
/// unchanged by the extension, and the constructive colouring rules must
/// produce valid colourings of the extended hypergraph.
pub fn verify_extension_preservation(
    solver: &Solver,
    trials: usize,
    seed: u64,
    mode: ExtensionMode,
) -> Result<VerificationReport, Error> {
    let started = Instant::now();
    let suite = match mode {
        ExtensionMode::Spectrum22 => Suite::ExtensionSpectrum,
        _ => Suite::ExtensionChromatic,
    };
    let results: Vec<Vec<Counterexample>> = instance_seeds(seed, trials)
        .par_iter()
        .enumerate()
        .map(|(i, &s)| extension_case(solver, seed, i, s, mode))
        .collect::<Result<_, Error>>()?;
    Ok(VerificationReport::finish(
        suite,
        trials,
        results.into_iter().flatten().collect(),
        started,
    ))
}

fn extension_case(
    solver: &Solver,
    seed: u64,
    index: usize,
    instance_seed: u64,
    mode: ExtensionMode,
) -> Result<Vec<Counterexample>, Error> {
    let (h, params) = extension_instance(instance_seed);
    let ext = extend_pq(&h, &params)?;
    let replay = json!({
        "seed": seed,
        "index": index,
        "instance_seed": instance_seed,
        "r": h.r(),
        "vertex_count": h.vertex_count(),
        "edges": h.edges(),
        "params": params,
    });
    let mut out = Vec::new();
    let mut fail = |what: &str, observed: String, expected: String| {
        out.push(Counterexample {
            instance: format!("#{index:05} {what}"),
            params: replay.clone(),
            observed,
            expected,
        });
    };

    if matches!(mode, ExtensionMode::Classical | ExtensionMode::Both) {
        let (chi, witness) = solver.chromatic_number(&h)?;
        let (chi_ext, _) = solver.chromatic_number(&ext)?;
        if chi != chi_ext {
            fail("chromatic number", chi_ext.to_string(), chi.to_string());
        }
        let lifted = extend_classical_colouring(&h, &params, &witness)?;
        if !check_classical(&ext, &lifted)? || lifted.k() != chi {
            fail(
                "classical colouring rule",
                format!("{:?}", lifted.colours()),
                "proper".into(),
            );
        }
    }
    if matches!(mode, ExtensionMode::Spectrum22 | ExtensionMode::Both) {
        let spec = solver.ab_spectrum(&h, 2, 2)?;
        let spec_ext = solver.ab_spectrum(&ext, 2, 2)?;
        if spec.feasible != spec_ext.feasible {
            fail(
                "(2,2)-spectrum",
                format!("{:?}", spec_ext.feasible),
                format!("{:?}", spec.feasible),
            );
        }
        for (&k, witness) in &spec.witnesses {
            let lifted = extend_22_colouring(&h, &params, witness)?;
            if !check_ab(&ext, &lifted, 2, 2)? || lifted.k() != k {
                fail(
                    &format!("(2,2) colouring rule k={k}"),
                    format!("{:?}", lifted.colours()),
                    "valid".into(),
                );
            }
        }
    }
    Ok(out)
}

/// Rebuilds the base hypergraph and star size of a stability instance.
pub fn star_instance(instance_seed: u64) -> (Hypergraph, usize, u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(instance_seed);
    let r = rng.random_range(3..=5);
    let h = random_hypergraph(&mut rng, r);
    let t = rng.random_range(1..=(r - 1) / 2);
    (h, t, rng.random())
}

/// Repeated t-star extensions: after the first, the clique number is
/// `max(omega(H), r + t)` and stays there; the chromatic number never moves.
pub fn verify_clique_stability(
    solver: &Solver,
    trials: usize,
    seed: u64,
    steps_max: usize,
) -> Result<VerificationReport, Error> {
    let started = Instant::now();
    let results: Vec<Vec<Counterexample>> = instance_seeds(seed, trials)
        .par_iter()
        .enumerate()
        .map(|(i, &s)| stability_case(solver, seed, i, s, steps_max))
        .collect::<Result<_, Error>>()?;
    Ok(VerificationReport::finish(
        Suite::StarClique,
        trials,
        results.into_iter().flatten().collect(),
        started,
    ))
}

fn stability_case(
    solver: &Solver,
    seed: u64,
    index: usize,
    instance_seed: u64,
    steps_max: usize,
) -> Result<Vec<Counterexample>, Error> {
    let (h, t, edge_seed) = star_instance(instance_seed);
    let mut edge_rng = ChaCha8Rng::seed_from_u64(edge_seed);
    let (omega0, _) = solver.clique_number(&h)?;
    let (chi0, _) = solver.chromatic_number(&h)?;
    let expected = omega0.max(h.r() + t);
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    let mut current = h.clone();
    for step in 1..=steps_max {
        let e = edge_rng.random_range(0..current.edge_count());
        chosen.push(e);
        current = star_extend(&current, e, t)?;
        let (omega, witness) = solver.clique_number(&current)?;
        let (chi, _) = solver.chromatic_number(&current)?;
        let replay = || {
            json!({
                "seed": seed,
                "index": index,
                "instance_seed": instance_seed,
                "t": t,
                "r": h.r(),
                "vertex_count": h.vertex_count(),
                "edges": h.edges(),
                "chosen_edges": chosen,
            })
        };
        if omega != expected || !current.is_clique(&witness) {
            out.push(Counterexample {
                instance: format!("#{index:05} step {step} clique number"),
                params: replay(),
                observed: omega.to_string(),
                expected: expected.to_string(),
            });
        }
        if chi != chi0 {
            out.push(Counterexample {
                instance: format!("#{index:05} step {step} chromatic number"),
                params: replay(),
                observed: chi.to_string(),
                expected: chi0.to_string(),
            });
        }
    }
    Ok(out)
}

/// Rebuilds an oracle-equivalence instance.
pub fn oracle_instance(instance_seed: u64) -> Hypergraph {
    let mut rng = ChaCha8Rng::seed_from_u64(instance_seed);
    let r = rng.random_range(3..=4);
    random_hypergraph(&mut rng, r)
}

/// `ab_spectrum == oracle_spectrum` (feasible set, gaps and witnesses) for
/// (alpha, beta) in {(2,2), (2,r), (2,3)}.
pub fn verify_oracle_equivalence(solver: &Solver, trials: usize, seed: u64) -> Result<VerificationReport, Error> {
    let started = Instant::now();
    let results: Vec<Vec<Counterexample>> = instance_seeds(seed, trials)
        .par_iter()
        .enumerate()
        .map(|(index, &instance_seed)| {
            let h = oracle_instance(instance_seed);
            let mut out = Vec::new();
            for (alpha, beta) in [(2, 2), (2, h.r()), (2, 3)] {
                let fast = solver.ab_spectrum(&h, alpha, beta)?;
                let slow = solver.oracle_spectrum(&h, alpha, beta)?;
                let sound = fast
                    .witnesses
                    .iter()
                    .map(|(&k, c)| Ok(check_ab(&h, c, alpha, beta)? && c.k() == k))
                    .collect::<Result<Vec<bool>, Error>>()?
                    .into_iter()
                    .all(|ok| ok);
                if fast != slow || !sound {
                    out.push(Counterexample {
                        instance: format!("#{index:05} ({alpha},{beta})"),
                        params: json!({
                            "seed": seed,
                            "index": index,
                            "instance_seed": instance_seed,
                            "r": h.r(),
                            "vertex_count": h.vertex_count(),
                            "edges": h.edges(),
                        }),
                        observed: format!("{:?}", fast.feasible),
                        expected: format!("{:?}", slow.feasible),
                    });
                }
            }
            Ok(out)
        })
        .collect::<Result<_, Error>>()?;
    Ok(VerificationReport::finish(
        Suite::OracleEquivalence,
        trials,
        results.into_iter().flatten().collect(),
        started,
    ))
}

/// Default settings for each suite.
#[derive(Debug, Clone, Copy)]
pub struct SuiteSettings {
    pub seed: u64,
    pub trials: Option<usize>,
}

/// Runs one suite at its default scale; sparse-sigma covers t = 1, 2 at r = 4
/// and t = 1 at r = 5.
pub fn run_suite(solver: &Solver, suite: Suite, settings: SuiteSettings) -> Result<Vec<VerificationReport>, Error> {
    let trials = |default: usize| settings.trials.unwrap_or(default);
    Ok(match suite {
        Suite::SymmetricPartition => vec![verify_lemma_rectangular(12)?],
        Suite::SigmaClique => vec![verify_clique_theorem(solver, &[3, 4], 12, 12)?],
        Suite::SparseSigma => [(1, 4), (2, 4), (1, 5)]
            .into_iter()
            .map(|(t, r)| verify_sparse_construction(solver, t, r))
            .collect::<Result<_, _>>()?,
        Suite::ExtensionChromatic => vec![verify_extension_preservation(
            solver,
            trials(100),
            settings.seed,
            ExtensionMode::Classical,
        )?],
        Suite::ExtensionSpectrum => vec![verify_extension_preservation(
            solver,
            trials(100),
            settings.seed,
            ExtensionMode::Spectrum22,
        )?],
        Suite::StarClique => vec![verify_clique_stability(solver, trials(50), settings.seed, 3)?],
        Suite::OracleEquivalence => vec![verify_oracle_equivalence(solver, trials(200), settings.seed)?],
    })
}
