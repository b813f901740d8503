use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::SolverError;
use crate::hypergraph::Hypergraph;

/// Vertex colouring in canonical form: colours are `1..=k` and colour `c`
/// first appears before colour `c + 1` in vertex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", from = "Vec<usize>")]
pub struct Colouring {
    colours: Vec<usize>,
    k: usize,
}

impl Colouring {
    /// Relabels arbitrary colour values into canonical form.
    pub fn new(values: Vec<usize>) -> Self {
        let mut relabel: BTreeMap<usize, usize> = BTreeMap::new();
        let mut colours = Vec::with_capacity(values.len());
        for v in values {
            let next = relabel.len() + 1;
            colours.push(*relabel.entry(v).or_insert(next));
        }
        Colouring {
            k: relabel.len(),
            colours,
        }
    }

    /// `colours` must already be canonical.
    pub(crate) fn from_canonical(colours: Vec<usize>) -> Self {
        let k = colours.iter().copied().max().unwrap_or(0);
        debug_assert!(Colouring::new(colours.clone()).colours == colours);
        Colouring { colours, k }
    }

    pub fn colours(&self) -> &[usize] {
        &self.colours
    }

    pub fn colour(&self, v: usize) -> usize {
        self.colours[v]
    }

    /// Number of distinct colours used.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    /// Copy with extra vertices appended. The appended colours must already be
    /// in use, so canonical form is preserved.
    pub(crate) fn extended(&self, extra: impl IntoIterator<Item = usize>) -> Colouring {
        let mut colours = self.colours.clone();
        colours.extend(extra);
        debug_assert!(colours.iter().all(|&c| c >= 1 && c <= self.k));
        Colouring { colours, k: self.k }
    }
}

impl From<Vec<usize>> for Colouring {
    fn from(values: Vec<usize>) -> Self {
        Colouring::new(values)
    }
}

impl From<Colouring> for Vec<usize> {
    fn from(c: Colouring) -> Self {
        c.colours
    }
}

fn require_total(h: &Hypergraph, c: &Colouring) -> Result<(), SolverError> {
    if c.len() != h.vertex_count() {
        return Err(SolverError::PartialColouring {
            expected: h.vertex_count(),
            got: c.len(),
        });
    }
    Ok(())
}

/// Number of distinct colours on one edge.
pub(crate) fn distinct_on(edge: &[usize], colours: &[usize]) -> usize {
    let mut seen: Vec<usize> = edge.iter().map(|&v| colours[v]).collect();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

/// True iff no edge is monochromatic.
pub fn check_classical(h: &Hypergraph, c: &Colouring) -> Result<bool, SolverError> {
    require_total(h, c)?;
    Ok(h.edges()
        .iter()
        .all(|e| e.iter().any(|&v| c.colour(v) != c.colour(e[0]))))
}

/// True iff every edge carries between `alpha` and `beta` distinct colours.
pub fn check_ab(h: &Hypergraph, c: &Colouring, alpha: usize, beta: usize) -> Result<bool, SolverError> {
    check_alpha_beta(h, alpha, beta)?;
    require_total(h, c)?;
    Ok(h.edges().iter().all(|e| {
        let d = distinct_on(e, c.colours());
        alpha <= d && d <= beta
    }))
}

pub(crate) fn check_alpha_beta(h: &Hypergraph, alpha: usize, beta: usize) -> Result<(), SolverError> {
    if alpha < 1 || alpha > beta || beta > h.r() {
        return Err(SolverError::BadAlphaBeta { alpha, beta, r: h.r() });
    }
    Ok(())
}
