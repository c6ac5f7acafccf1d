use thiserror::Error;

use crate::catalog::CatalogError;
use crate::hj::HjError;
use crate::invariants::InvariantError;
use crate::quaternion::QuaternionError;
use crate::resolution::ResolutionError;

/// Crate-level error. Each variant names the module the failure came from.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("quaternion_core: {0}")]
    Quaternion(#[from] QuaternionError),
    #[error("group_catalog: {0}")]
    Catalog(#[from] CatalogError),
    #[error("hirzebruch_jung: {0}")]
    Hj(#[from] HjError),
    #[error("resolution_geometry: {0}")]
    Resolution(#[from] ResolutionError),
    #[error("invariants: {0}")]
    Invariant(#[from] InvariantError),
    #[error("cli_report: {0}")]
    Report(String),
}

impl Error {
    pub fn module(&self) -> &'static str {
        match self {
            Error::Quaternion(_) => "quaternion_core",
            Error::Catalog(_) => "group_catalog",
            Error::Hj(_) => "hirzebruch_jung",
            Error::Resolution(_) => "resolution_geometry",
            Error::Invariant(_) => "invariants",
            Error::Report(_) => "cli_report",
        }
    }

    /// Errors caused by bad input rather than a failed identity.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Report(_)
                | Error::Catalog(CatalogError::InvalidParameters(_))
                | Error::Catalog(CatalogError::Parse(_))
                | Error::Catalog(CatalogError::NotApplicable(_))
                | Error::Catalog(CatalogError::NotCoprime { .. })
                | Error::Hj(_)
                | Error::Resolution(ResolutionError::NotApplicable(_))
                | Error::Invariant(InvariantError::NotApplicable(_))
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
