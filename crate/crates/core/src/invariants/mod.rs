//! Character sums, deformation dimensions and topological bookkeeping.

mod character;
mod topology;

use thiserror::Error;

pub use character::{char_rho, character_average, closed_form_dim, closed_form_expression, dim_sfk, eisenstein_check, sawtooth, DeformationReport};
pub use topology::{topology_from, topology_report, TopologyReport};

use crate::catalog::GroupSpec;
use crate::error::Result;
use crate::resolution::{b_gamma, resolution_graph, PlumbingGraph};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum InvariantError {
    #[error("{what}: residual {residual:e} exceeds tolerance {tol:e}")]
    SnapFailure { what: String, residual: f64, tol: f64 },
    #[error("not applicable: {0}")]
    NotApplicable(String),
}

/// `Σ (|wᵢ| − 1)` over all curves.
pub fn dim_h1_theta(graph: &PlumbingGraph) -> i64 {
    graph.weights().iter().map(|w| w.abs() - 1).sum()
}

/// `2(b_Γ − 1) + k_Γ`.
pub fn moduli_dim(spec: &GroupSpec) -> Result<i64> {
    let b = b_gamma(spec)?.value;
    let k = resolution_graph(spec)?.k_gamma;
    Ok(2 * (b - 1) + k)
}
