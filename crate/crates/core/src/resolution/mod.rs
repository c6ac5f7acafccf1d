//! Orbifold singularities of the model quotients, minimal resolution
//! graphs and compactification graphs.

mod compactify;
mod plumbing;
mod singularities;

use thiserror::Error;

pub use compactify::{
    compactification, compactification_of, cyclic_equivalent_type, resolution_graph, solve_b_prime, BPrimeReport,
    Compactification, Resolution,
};
pub use plumbing::{to_dot, Configuration, PlumbingGraph, StarElimination};
pub use singularities::{
    b_gamma, b_gamma_integer, b_gamma_rational, computed_triple, effective_cosets, singularity_triple,
    singularity_triple_of, table_triple, Agreement, BGamma, SingularityTriple,
};

use crate::catalog::CyclicType;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ResolutionError {
    #[error("{spec}: found {found} singular orbits, expected 3")]
    OrbitCountMismatch { spec: String, found: usize },
    #[error("{spec}: table triple {table:?} disagrees with computed {computed:?}")]
    TableDisagreement {
        spec: String,
        table: Vec<CyclicType>,
        computed: Vec<CyclicType>,
    },
    #[error("{0}")]
    CrossCheckFailure(String),
    #[error("malformed graph: {0}")]
    MalformedGraph(String),
    #[error(
        "{spec}: no b' candidate (lattice-only candidates {lattice_candidates:?}, Euler-number candidates {seifert_candidates:?})"
    )]
    NoCandidate {
        spec: String,
        lattice_candidates: Vec<i64>,
        seifert_candidates: Vec<i64>,
    },
    #[error("{spec}: several b' candidates {candidates:?}")]
    AmbiguousCandidate { spec: String, candidates: Vec<i64> },
    #[error("{what}: residual {residual:e} exceeds tolerance {tol:e}")]
    SnapFailure { what: String, residual: f64, tol: f64 },
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("overflow: {0}")]
    Overflow(String),
}
