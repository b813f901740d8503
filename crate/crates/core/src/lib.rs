//! Exact colouring, (alpha, beta)-spectrum and clique computations for
//! r-uniform hypergraphs, sigma-hypergraphs, and their (p,q)- and t-star
//! extensions.

pub mod constructors;
pub mod harness;
pub mod hypergraph;
pub mod io;
pub mod partitions;
pub mod solvers;

pub use constructors::{
    build_sigma_hypergraph, extend_22_colouring, extend_classical_colouring, extend_pq, iterate_star, sigma_edge_count,
    star_extend, ConstructError, EdgeRule, ExtensionParams, SigmaMeta,
};
pub use hypergraph::{Hypergraph, HypergraphError, VertexSet};
pub use partitions::{enumerate_partitions, Partition, PartitionError};
pub use solvers::{
    ab_colourable, ab_spectrum, check_ab, check_classical, chromatic_number, clique_number, oracle_spectrum, Colouring,
    Limits, Solver, SolverError, Spectrum,
};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Io(#[from] io::IoError),
    #[error("{0}")]
    Usage(String),
}

impl Error {
    /// True when the failure is a size-guard refusal.
    pub fn is_size_guard(&self) -> bool {
        matches!(
            self,
            Error::Solver(SolverError::SizeGuardExceeded { .. })
                | Error::Construct(ConstructError::SizeGuardExceeded { .. })
                | Error::Construct(ConstructError::Colouring(SolverError::SizeGuardExceeded { .. }))
        )
    }
}
