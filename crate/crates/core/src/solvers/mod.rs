//! Exact colouring, spectrum and clique solvers.
//!
//! Every procedure here is exhaustive: a negative answer is a proof over all
//! canonical colourings (or all candidate vertex sets), not a heuristic miss.

mod clique;
mod colouring;
mod oracle;
mod search;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use colouring::{check_ab, check_classical, Colouring};

use crate::hypergraph::{Hypergraph, VertexSet, MASK_VERTEX_LIMIT};

pub const DEFAULT_SEARCH_GUARD: usize = 64;
pub const DEFAULT_ORACLE_GUARD: usize = 10;
/// Environment variable overriding the search and construction guards.
pub const GUARD_ENV: &str = "HYPERLAB_GUARD";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("colouring covers {got} vertices, hypergraph has {expected}")]
    PartialColouring { expected: usize, got: usize },
    #[error("need 1 <= alpha <= beta <= r, got alpha = {alpha}, beta = {beta}, r = {r}")]
    BadAlphaBeta { alpha: usize, beta: usize, r: usize },
    #[error("{vertices} vertices exceeds the size guard of {guard}")]
    SizeGuardExceeded { vertices: usize, guard: usize },
}

/// Size guards for exact procedures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Vertex limit for backtracking solvers and constructions.
    pub search: usize,
    /// Vertex limit for the exhaustive oracle.
    pub oracle: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            search: DEFAULT_SEARCH_GUARD,
            oracle: DEFAULT_ORACLE_GUARD,
        }
    }
}

impl Limits {
    /// Overrides the search guard. Values above 128 are refused because the
    /// solvers index vertices with 128-bit masks.
    pub fn with_search_guard(mut self, guard: usize) -> Result<Self, SolverError> {
        if guard > MASK_VERTEX_LIMIT {
            return Err(SolverError::SizeGuardExceeded {
                vertices: guard,
                guard: MASK_VERTEX_LIMIT,
            });
        }
        if guard != DEFAULT_SEARCH_GUARD {
            log::warn!("search size guard overridden: {guard} vertices (default {DEFAULT_SEARCH_GUARD})");
        }
        self.search = guard;
        Ok(self)
    }

    /// Defaults, with `HYPERLAB_GUARD` applied when set to an integer.
    pub fn from_env() -> Result<Self, SolverError> {
        match std::env::var(GUARD_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
        {
            Some(g) => Limits::default().with_search_guard(g),
            None => Ok(Limits::default()),
        }
    }

    fn check_search(&self, h: &Hypergraph) -> Result<(), SolverError> {
        if h.vertex_count() > self.search {
            return Err(SolverError::SizeGuardExceeded {
                vertices: h.vertex_count(),
                guard: self.search,
            });
        }
        Ok(())
    }
}

/// The set of colour counts admitting an (alpha, beta)-colouring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Spectrum {
    pub alpha: usize,
    pub beta: usize,
    pub feasible: Vec<usize>,
    pub witnesses: BTreeMap<usize, Colouring>,
    pub gaps: Vec<usize>,
}

impl Spectrum {
    fn from_witnesses(alpha: usize, beta: usize, witnesses: BTreeMap<usize, Colouring>) -> Self {
        let feasible: Vec<usize> = witnesses.keys().copied().collect();
        let gaps = match (feasible.first(), feasible.last()) {
            (Some(&lo), Some(&hi)) => (lo + 1..hi).filter(|k| !witnesses.contains_key(k)).collect(),
            _ => Vec::new(),
        };
        Spectrum {
            alpha,
            beta,
            feasible,
            witnesses,
            gaps,
        }
    }

    /// Smallest feasible colour count.
    pub fn lower(&self) -> Option<usize> {
        self.feasible.first().copied()
    }

    /// Largest feasible colour count.
    pub fn upper(&self) -> Option<usize> {
        self.feasible.last().copied()
    }

    pub fn contains(&self, k: usize) -> bool {
        self.witnesses.contains_key(&k)
    }

    pub fn is_broken(&self) -> bool {
        !self.gaps.is_empty()
    }
}

/// Entry point for the exact solvers under a given set of size guards.
#[derive(Debug, Clone, Copy, Default)]
pub struct Solver {
    limits: Limits,
}

impl Solver {
    pub fn new(limits: Limits) -> Self {
        Solver { limits }
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    /// Classical chromatic number with a witness. Edgeless hypergraphs have
    /// chromatic number 1 (0 when there are no vertices at all).
    pub fn chromatic_number(&self, h: &Hypergraph) -> Result<(usize, Colouring), SolverError> {
        self.limits.check_search(h)?;
        let n = h.vertex_count();
        if n == 0 {
            return Ok((0, Colouring::new(Vec::new())));
        }
        let r = h.r();
        for k in 1..=n {
            if let Some(c) = search::ColourSearch::new(h, k, 2, r, false).run() {
                let c = Colouring::from_canonical(c);
                debug_assert_eq!(c.k(), if h.edge_count() == 0 { 1 } else { k });
                return Ok((c.k(), c));
            }
        }
        unreachable!("an edge of size r >= 2 is never monochromatic under a rainbow colouring")
    }

    /// A lexicographically smallest canonical k-(alpha, beta)-colouring, if any.
    pub fn ab_colourable(
        &self,
        h: &Hypergraph,
        k: usize,
        alpha: usize,
        beta: usize,
    ) -> Result<Option<Colouring>, SolverError> {
        colouring::check_alpha_beta(h, alpha, beta)?;
        self.limits.check_search(h)?;
        Ok(search::ColourSearch::new(h, k, alpha, beta, true)
            .run()
            .map(Colouring::from_canonical))
    }

    /// All feasible colour counts in `1..=vertex_count`, with witnesses and gaps.
    pub fn ab_spectrum(&self, h: &Hypergraph, alpha: usize, beta: usize) -> Result<Spectrum, SolverError> {
        colouring::check_alpha_beta(h, alpha, beta)?;
        self.limits.check_search(h)?;
        let witnesses: BTreeMap<usize, Colouring> = (1..=h.vertex_count())
            .into_par_iter()
            .filter_map(|k| {
                search::ColourSearch::new(h, k, alpha, beta, true)
                    .run()
                    .map(|c| (k, Colouring::from_canonical(c)))
            })
            .collect();
        Ok(Spectrum::from_witnesses(alpha, beta, witnesses))
    }

    /// Clique number with a witness; `r - 1` and an empty set for edgeless input.
    pub fn clique_number(&self, h: &Hypergraph) -> Result<(usize, VertexSet), SolverError> {
        self.limits.check_search(h)?;
        let best = clique::CliqueSearch::new(h).run();
        if best.is_empty() {
            return Ok((h.r() - 1, VertexSet::empty()));
        }
        Ok((best.len(), VertexSet::new(best)))
    }

    /// Same contract as [`Solver::ab_spectrum`], by exhaustive enumeration.
    pub fn oracle_spectrum(&self, h: &Hypergraph, alpha: usize, beta: usize) -> Result<Spectrum, SolverError> {
        colouring::check_alpha_beta(h, alpha, beta)?;
        if h.vertex_count() > self.limits.oracle {
            return Err(SolverError::SizeGuardExceeded {
                vertices: h.vertex_count(),
                guard: self.limits.oracle,
            });
        }
        Ok(Spectrum::from_witnesses(
            alpha,
            beta,
            oracle::exhaustive_witnesses(h, alpha, beta),
        ))
    }
}

pub fn chromatic_number(h: &Hypergraph) -> Result<(usize, Colouring), SolverError> {
    Solver::default().chromatic_number(h)
}

pub fn ab_colourable(h: &Hypergraph, k: usize, alpha: usize, beta: usize) -> Result<Option<Colouring>, SolverError> {
    Solver::default().ab_colourable(h, k, alpha, beta)
}

pub fn ab_spectrum(h: &Hypergraph, alpha: usize, beta: usize) -> Result<Spectrum, SolverError> {
    Solver::default().ab_spectrum(h, alpha, beta)
}

pub fn clique_number(h: &Hypergraph) -> Result<(usize, VertexSet), SolverError> {
    Solver::default().clique_number(h)
}

pub fn oracle_spectrum(h: &Hypergraph, alpha: usize, beta: usize) -> Result<Spectrum, SolverError> {
    Solver::default().oracle_spectrum(h, alpha, beta)
}
