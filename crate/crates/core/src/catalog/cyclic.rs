use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::CatalogError;

/// Lens type `L(α, β)`: the cyclic group generated by `diag(ζ, ζ^α)` with
/// `ζ = e^{2πi/β}`. The trivial type is `(0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CyclicType {
    pub alpha: i64,
    pub beta: i64,
}

impl CyclicType {
    pub const TRIVIAL: CyclicType = CyclicType { alpha: 0, beta: 1 };

    pub fn is_trivial(&self) -> bool {
        self.beta == 1
    }

    /// `α / β` as an exact rational.
    pub fn ratio(&self) -> Ratio<i64> {
        Ratio::new(self.alpha, self.beta)
    }

    /// `L(α⁻¹, β)`, the same group with the coordinates swapped.
    pub fn conjugate(&self) -> CyclicType {
        if self.is_trivial() {
            return *self;
        }
        CyclicType {
            alpha: mod_inverse(self.alpha, self.beta).expect("normalized type is coprime"),
            beta: self.beta,
        }
    }

    /// Representative used when comparing up to coordinate swap:
    /// `min(α, α⁻¹ mod β)`.
    pub fn conjugate_canonical(&self) -> CyclicType {
        let c = self.conjugate();
        if c.alpha < self.alpha {
            c
        } else {
            *self
        }
    }

    pub fn conjugate_equivalent(&self, other: &CyclicType) -> bool {
        self.conjugate_canonical() == other.conjugate_canonical()
    }
}

impl fmt::Display for CyclicType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.alpha, self.beta)
    }
}

/// Normalizes `(a, β)` to `1 ≤ α ≤ β − 1`; `β = 1` gives the trivial type.
pub fn canonical_cyclic(a: i64, beta: i64) -> Result<CyclicType, CatalogError> {
    if beta < 1 {
        return Err(CatalogError::NotCoprime { a, beta });
    }
    if beta == 1 {
        return Ok(CyclicType::TRIVIAL);
    }
    if a.gcd(&beta) != 1 {
        return Err(CatalogError::NotCoprime { a, beta });
    }
    Ok(CyclicType {
        alpha: a.rem_euclid(beta),
        beta,
    })
}

/// Inverse of `a` modulo `n`, in `[0, n)`.
pub fn mod_inverse(a: i64, n: i64) -> Option<i64> {
    if n == 1 {
        return Some(0);
    }
    let e = a.rem_euclid(n).extended_gcd(&n);
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(n))
}
