//! Sigma-hypergraphs, (p,q)-extensions and t-star extensions.

use std::collections::BTreeSet;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypergraph::Hypergraph;
use crate::partitions::Partition;
use crate::solvers::{check_ab, check_classical, Colouring, SolverError, DEFAULT_SEARCH_GUARD};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("sigma {sigma} sums to {total}, but r = {r}")]
    SigmaTotalMismatch { sigma: String, total: usize, r: usize },
    #[error("sigma has {parts} parts but only {n} classes")]
    TooFewClasses { n: usize, parts: usize },
    #[error("{vertices} vertices exceeds the size guard of {guard}")]
    SizeGuardExceeded { vertices: usize, guard: usize },
    #[error("invalid T {t:?}: need a non-empty subset of 1..={max}")]
    InvalidT { t: Vec<usize>, max: usize },
    #[error("invalid P/Q: {0}")]
    InvalidPQ(String),
    #[error("edge index {index} out of range ({edges} edges)")]
    EdgeIndexOutOfRange { index: usize, edges: usize },
    #[error("t = {t} out of range 1..={max}")]
    TOutOfRange { t: usize, max: usize },
    #[error("input colouring is not a valid {0} colouring of the base hypergraph")]
    ImproperInput(&'static str),
    #[error(transparent)]
    Colouring(#[from] SolverError),
}

/// Class structure of a sigma-hypergraph: class i is `[i*q, (i+1)*q)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaMeta {
    pub n: usize,
    pub q: usize,
    pub sigma: Partition,
    pub classes: Vec<Vec<usize>>,
}

impl SigmaMeta {
    pub fn new(n: usize, q: usize, sigma: Partition) -> Self {
        let classes = (0..n).map(|i| (i * q..(i + 1) * q).collect()).collect();
        SigmaMeta { n, q, sigma, classes }
    }

    pub fn class_of(&self, v: usize) -> usize {
        v / self.q
    }

    /// Class-intersection pattern of a vertex set, as a partition.
    pub fn pattern(&self, vertices: &[usize]) -> Option<Partition> {
        let counts = vertices.iter().counts_by(|&v| self.class_of(v));
        (!counts.is_empty()).then(|| Partition::from_parts(counts.into_values().collect()))
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k as u128).fold(1u128, |acc, i| acc * (n as u128 - i) / (i + 1))
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Closed-form edge count of `H(n, r, q | sigma)`.
///
/// Parts are grouped by value with multiplicities `m_j`; the count is
/// `n! / ((n - s)! * prod m_j!) * prod_parts C(q, a)`.
pub fn sigma_edge_count(n: usize, q: usize, sigma: &Partition) -> Result<u128, ConstructError> {
    let s = sigma.s();
    if n < s {
        return Err(ConstructError::TooFewClasses { n, parts: s });
    }
    let placements = factorial(n)
        / factorial(n - s)
        / sigma
            .parts()
            .iter()
            .counts()
            .values()
            .map(|&m| factorial(m))
            .product::<u128>();
    let within: u128 = sigma.parts().iter().map(|&a| binomial(q, a)).product();
    Ok(placements * within)
}

/// Builds `H(n, r, q | sigma)` with the default vertex guard.
pub fn build_sigma_hypergraph(
    n: usize,
    r: usize,
    q: usize,
    sigma: &Partition,
) -> Result<(Hypergraph, SigmaMeta), ConstructError> {
    build_sigma_hypergraph_guarded(n, r, q, sigma, DEFAULT_SEARCH_GUARD)
}

pub fn build_sigma_hypergraph_guarded(
    n: usize,
    r: usize,
    q: usize,
    sigma: &Partition,
    guard: usize,
) -> Result<(Hypergraph, SigmaMeta), ConstructError> {
    build_sigma(n, r, q, sigma, guard, true)
}

/// Sweeps over q hit the empty case on purpose; they pass `warn_empty = false`.
pub(crate) fn build_sigma(
    n: usize,
    r: usize,
    q: usize,
    sigma: &Partition,
    guard: usize,
    warn_empty: bool,
) -> Result<(Hypergraph, SigmaMeta), ConstructError> {
    if sigma.total() != r {
        return Err(ConstructError::SigmaTotalMismatch {
            sigma: sigma.to_string(),
            total: sigma.total(),
            r,
        });
    }
    if n < sigma.s() {
        return Err(ConstructError::TooFewClasses { n, parts: sigma.s() });
    }
    if n * q > guard {
        return Err(ConstructError::SizeGuardExceeded { vertices: n * q, guard });
    }
    if warn_empty && q < sigma.largest() {
        log::warn!("q = {q} is below the largest part of {sigma}: H({n},{r},{q}|{sigma}) has no edges");
    }
    let meta = SigmaMeta::new(n, q, sigma.clone());
    let parts = sigma.parts();
    let mut edges = Vec::new();
    // equal parts go to increasing classes so each edge is produced once
    for classes in (0..n).permutations(parts.len()) {
        let redundant = (1..parts.len()).any(|i| parts[i] == parts[i - 1] && classes[i] < classes[i - 1]);
        if redundant {
            continue;
        }
        let choices: Vec<Vec<Vec<usize>>> = classes
            .iter()
            .zip(parts)
            .map(|(&c, &a)| meta.classes[c].iter().copied().combinations(a).collect())
            .collect();
        for pick in choices.iter().multi_cartesian_product() {
            let mut e: Vec<usize> = pick.into_iter().flatten().copied().collect();
            e.sort_unstable();
            edges.push(e);
        }
    }
    edges.sort_unstable();
    debug_assert!(edges.windows(2).all(|w| w[0] != w[1]));
    let h = Hypergraph::from_canonical(
        r,
        n * q,
        edges,
        vec![format!("sigma n={n} r={r} q={q} sigma={}", csv(parts))],
    );
    Ok((h, meta))
}

fn csv(values: &[usize]) -> String {
    values.iter().map(|v| v.to_string()).join(",")
}

/// Parameters of a (p,q)-extension over the edge `edge_index`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionParams {
    pub edge_index: usize,
    pub p: usize,
    pub q_ext: usize,
    pub t: BTreeSet<usize>,
    pub p_sizes: BTreeSet<usize>,
    pub q_sizes: BTreeSet<usize>,
}

impl ExtensionParams {
    pub fn new(
        edge_index: usize,
        p: usize,
        q_ext: usize,
        t: impl IntoIterator<Item = usize>,
        p_sizes: impl IntoIterator<Item = usize>,
        q_sizes: impl IntoIterator<Item = usize>,
    ) -> Self {
        ExtensionParams {
            edge_index,
            p,
            q_ext,
            t: t.into_iter().collect(),
            p_sizes: p_sizes.into_iter().collect(),
            q_sizes: q_sizes.into_iter().collect(),
        }
    }

    /// The t-star parameters: `W` of size t, no `U`, `T = {1..t}`.
    pub fn star(edge_index: usize, t: usize) -> Self {
        ExtensionParams::new(edge_index, t, 0, 1..=t, [], [])
    }

    pub fn validate(&self, h: &Hypergraph) -> Result<(), ConstructError> {
        let r = h.r();
        if self.edge_index >= h.edge_count() {
            return Err(ConstructError::EdgeIndexOutOfRange {
                index: self.edge_index,
                edges: h.edge_count(),
            });
        }
        let t_max = self.p.min((r - 1) / 2);
        if self.p == 0 || self.t.is_empty() || self.t.iter().any(|&x| x == 0 || x > t_max) {
            return Err(ConstructError::InvalidT {
                t: self.t.iter().copied().collect(),
                max: t_max,
            });
        }
        if self.q_ext == 0 {
            if !self.p_sizes.is_empty() || !self.q_sizes.is_empty() {
                return Err(ConstructError::InvalidPQ(
                    "P and Q must be empty when U is empty".into(),
                ));
            }
            return Ok(());
        }
        let p_max = self.p.min(r.saturating_sub(2));
        let q_max = self.q_ext.min(r.saturating_sub(2));
        if self.p_sizes.is_empty() || self.p_sizes.iter().any(|&x| x == 0 || x > p_max) {
            return Err(ConstructError::InvalidPQ(format!(
                "P = {:?} must be a non-empty subset of 1..={p_max}",
                self.p_sizes
            )));
        }
        if self.q_sizes.is_empty() || self.q_sizes.iter().any(|&y| y == 0 || y > q_max) {
            return Err(ConstructError::InvalidPQ(format!(
                "Q = {:?} must be a non-empty subset of 1..={q_max}",
                self.q_sizes
            )));
        }
        let witness = self.p_sizes.first().unwrap() + self.q_sizes.first().unwrap() < r;
        if !witness {
            return Err(ConstructError::InvalidPQ(format!(
                "no x in P, y in Q with x + y <= {}",
                r - 1
            )));
        }
        Ok(())
    }

    fn describe(&self, h: &Hypergraph) -> String {
        format!(
            "extend edge={} E*=[{}] p={} q={} T={} P={} Q={}",
            self.edge_index,
            csv(&h.edges()[self.edge_index]),
            self.p,
            self.q_ext,
            csv(&self.t.iter().copied().collect_vec()),
            csv(&self.p_sizes.iter().copied().collect_vec()),
            csv(&self.q_sizes.iter().copied().collect_vec()),
        )
    }
}

/// Vertex blocks of an extension: `W` then `U`, appended after the base vertices.
pub fn extension_blocks(h: &Hypergraph, params: &ExtensionParams) -> (Vec<usize>, Vec<usize>) {
    let base = h.vertex_count();
    let w = (base..base + params.p).collect();
    let u = (base + params.p..base + params.p + params.q_ext).collect();
    (w, u)
}

/// The (p,q)-extension: base edges plus all Type 1 and Type 2 edges.
pub fn extend_pq(h: &Hypergraph, params: &ExtensionParams) -> Result<Hypergraph, ConstructError> {
    params.validate(h)?;
    let r = h.r();
    let star = &h.edges()[params.edge_index];
    let (w, u) = extension_blocks(h, params);
    let mut edges: Vec<Vec<usize>> = h.edges().to_vec();

    // Type 1: r-subsets of E* ∪ W meeting W in a size from T
    for &x in &params.t {
        debug_assert!(r - x >= 2, "Type 1 edges keep at least two E* vertices");
        for from_w in w.iter().copied().combinations(x) {
            for from_e in star.iter().copied().combinations(r - x) {
                edges.push(from_e.iter().chain(&from_w).copied().collect());
            }
        }
    }
    // Type 2: meet W in x ∈ P, U in y ∈ Q, x + y <= r - 1, rest from E*
    for (&x, &y) in params.p_sizes.iter().cartesian_product(&params.q_sizes) {
        if x + y > r - 1 {
            continue;
        }
        for from_w in w.iter().copied().combinations(x) {
            for from_u in u.iter().copied().combinations(y) {
                for from_e in star.iter().copied().combinations(r - x - y) {
                    debug_assert!(!from_e.is_empty() && !from_w.is_empty() && !from_u.is_empty());
                    edges.push(from_e.iter().chain(&from_w).chain(&from_u).copied().collect());
                }
            }
        }
    }
    // base vertices precede W precede U, so each new edge is already sorted
    edges.sort_unstable();
    edges.dedup();
    let mut provenance = h.provenance().to_vec();
    provenance.push(params.describe(h));
    Ok(Hypergraph::from_canonical(
        r,
        h.vertex_count() + params.p + params.q_ext,
        edges,
        provenance,
    ))
}

/// The t-star extension over `edge_index`.
pub fn star_extend(h: &Hypergraph, edge_index: usize, t: usize) -> Result<Hypergraph, ConstructError> {
    let max = (h.r() - 1) / 2;
    if t == 0 || t > max {
        return Err(ConstructError::TOutOfRange { t, max });
    }
    if edge_index >= h.edge_count() {
        return Err(ConstructError::EdgeIndexOutOfRange {
            index: edge_index,
            edges: h.edge_count(),
        });
    }
    let mut out = extend_pq(h, &ExtensionParams::star(edge_index, t))?;
    let mut provenance = h.provenance().to_vec();
    provenance.push(format!(
        "star t={t} edge={edge_index} E*=[{}]",
        csv(&h.edges()[edge_index])
    ));
    out.set_provenance(provenance);
    Ok(out)
}

/// Which edge [`iterate_star`] extends at each step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeRule {
    /// Lexicographically first edge.
    #[default]
    First,
    /// Lexicographically last edge.
    Last,
    /// Uniformly random edge from a seeded stream.
    Random(u64),
}

/// Applies [`star_extend`] `steps` times, choosing the edge by `rule`.
pub fn iterate_star(h: &Hypergraph, t: usize, steps: usize, rule: EdgeRule) -> Result<Hypergraph, ConstructError> {
    let mut rng = match rule {
        EdgeRule::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let mut current = h.clone();
    for _ in 0..steps {
        let m = current.edge_count();
        let index = match (rule, rng.as_mut()) {
            (_, _) if m == 0 => 0,
            (EdgeRule::First, _) => 0,
            (EdgeRule::Last, _) => m - 1,
            (EdgeRule::Random(_), Some(rng)) => rng.random_range(0..m),
            (EdgeRule::Random(_), None) => unreachable!(),
        };
        current = star_extend(&current, index, t)?;
    }
    Ok(current)
}

/// Colour multiplicities on the extension edge, most frequent last; ties
/// keep the order of first appearance on `E*`.
fn edge_colour_counts(star: &[usize], c: &Colouring) -> Vec<(usize, usize)> {
    let mut counts: Vec<(usize, usize)> = Vec::new();
    for &v in star {
        let col = c.colour(v);
        match counts.iter_mut().find(|(k, _)| *k == col) {
            Some(entry) => entry.1 += 1,
            None => counts.push((col, 1)),
        }
    }
    counts.sort_by_key(|&(_, m)| m);
    counts
}

/// Extends a proper classical colouring of `h` to `extend_pq(h, params)`:
/// `W` takes a least frequent colour of `E*`, `U` another colour of `E*`.
pub fn extend_classical_colouring(
    h: &Hypergraph,
    params: &ExtensionParams,
    c: &Colouring,
) -> Result<Colouring, ConstructError> {
    params.validate(h)?;
    if !check_classical(h, c)? {
        return Err(ConstructError::ImproperInput("classical"));
    }
    let counts = edge_colour_counts(&h.edges()[params.edge_index], c);
    let (w_colour, u_colour) = (counts[0].0, counts[1].0);
    Ok(c.extended(std::iter::repeat_n(w_colour, params.p).chain(std::iter::repeat_n(u_colour, params.q_ext))))
}

/// Extends a (2,2)-colouring of `h` to `extend_pq(h, params)`: `W` takes the
/// minority colour of `E*`, `U` the majority colour. On an even split `W`
/// takes the colour of the lowest vertex of `E*`.
pub fn extend_22_colouring(
    h: &Hypergraph,
    params: &ExtensionParams,
    c: &Colouring,
) -> Result<Colouring, ConstructError> {
    params.validate(h)?;
    if !check_ab(h, c, 2, 2)? {
        return Err(ConstructError::ImproperInput("(2,2)"));
    }
    let star = &h.edges()[params.edge_index];
    let counts = edge_colour_counts(star, c);
    debug_assert_eq!(counts.len(), 2);
    let (minority, majority) = if counts[0].1 == counts[1].1 {
        let first = c.colour(star[0]);
        let other = if counts[0].0 == first { counts[1].0 } else { counts[0].0 };
        (first, other)
    } else {
        (counts[0].0, counts[1].0)
    };
    Ok(c.extended(std::iter::repeat_n(minority, params.p).chain(std::iter::repeat_n(majority, params.q_ext))))
}
