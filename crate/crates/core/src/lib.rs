//! Invariants of finite subgroups of U(2) acting freely on the 3-sphere.
//!
//! Groups are given by quaternion-pair generators and enumerated
//! numerically. Everything downstream of enumeration (singularity types,
//! resolution and compactification graphs, deformation dimensions) is
//! reduced to exact integers or rationals and cross-checked by at least two
//! independent routes.

pub mod catalog;
pub mod error;
pub mod hj;
pub mod invariants;
pub mod lattice;
pub mod quaternion;
pub mod rational;
pub mod report;
pub mod resolution;

pub use error::{Error, Result};
