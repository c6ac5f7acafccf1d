//! Hirzebruch-Jung strings of cyclic quotient singularities.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::{canonical_cyclic, CyclicType};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HjError {
    #[error("trivial type {0} has an empty string")]
    TrivialType(CyclicType),
    #[error("{0} is not a normalized type")]
    NotNormalized(CyclicType),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HjString {
    pub entries: Vec<i64>,
    pub source: CyclicType,
}

impl HjString {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Runs `p = e·q − a` with `0 ≤ a < q` until the remainder vanishes.
pub fn hj_string(t: CyclicType) -> Result<HjString, HjError> {
    if t.is_trivial() {
        return Err(HjError::TrivialType(t));
    }
    if t.alpha < 1 || t.alpha >= t.beta {
        return Err(HjError::NotNormalized(t));
    }
    let (mut p, mut q) = (t.beta, t.alpha);
    let mut entries = Vec::new();
    while q > 0 {
        let e = (p + q - 1) / q;
        let a = e * q - p;
        entries.push(e);
        p = q;
        q = a;
    }
    Ok(HjString { entries, source: t })
}

/// `1 / (e₁ − 1/(e₂ − ⋯))`. Exact; `None` for an empty string.
pub fn cf_value(entries: &[i64]) -> Option<Ratio<i64>> {
    let (&last, rest) = entries.split_last()?;
    let mut x = Ratio::from_integer(last);
    for &e in rest.iter().rev() {
        x = Ratio::from_integer(e) - x.recip();
    }
    Some(x.recip())
}

/// `L(β − α, β)`.
pub fn dual_type(t: CyclicType) -> CyclicType {
    if t.is_trivial() {
        return t;
    }
    canonical_cyclic(t.beta - t.alpha, t.beta).expect("dual of a normalized type")
}
