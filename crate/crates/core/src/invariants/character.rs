use std::f64::consts::PI;

use num_complex::Complex64;
use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::InvariantError;
use crate::catalog::{gamma_prime, GroupSpec};
use crate::error::Result;
use crate::resolution::b_gamma;

/// `((x)) = x − ⌊x⌋ − 1/2`, and `0` at integers.
pub fn sawtooth(x: Ratio<i64>) -> Ratio<i64> {
    if x.is_integer() {
        Ratio::from_integer(0)
    } else {
        x - x.floor() - Ratio::new(1, 2)
    }
}

/// `z₁z₂ · Σ_{p=0}^{2m−2} z₁^{2m−2−p} z₂^p`.
pub fn char_rho(z1: Complex64, z2: Complex64, m: i64) -> Complex64 {
    let top = (2 * m - 2) as usize;
    let mut term = Complex64::new(1.0, 0.0);
    for _ in 0..top {
        term *= z1;
    }
    let ratio = z2 / z1;
    let mut sum = Complex64::new(0.0, 0.0);
    for _ in 0..=top {
        sum += term;
        term *= ratio;
    }
    z1 * z2 * sum
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DeformationReport {
    pub brute: i64,
    pub closed: i64,
    pub two_b_minus_2: i64,
    /// False for `m = 1`, where only the brute-force value is meaningful.
    pub applicable: bool,
    pub agreement: bool,
    pub residual: f64,
}

/// Per-family case expression for the invariant dimension; `None` at `m = 1`,
/// where the expression is not meaningful.
pub fn closed_form_dim(spec: &GroupSpec) -> Result<Option<i64>> {
    let v = closed_form_expression(spec)?;
    Ok((spec.m() != Some(1)).then_some(v))
}

/// The case expression evaluated for any `m`, including `m = 1`.
pub fn closed_form_expression(spec: &GroupSpec) -> Result<i64> {
    spec.validate()?;
    let m = match spec.m() {
        Some(m) if !spec.is_degenerate() => m,
        _ => return Err(InvariantError::NotApplicable(format!("{spec} is cyclic")).into()),
    };
    let fl = |a: i64, b: i64| Integer::div_floor(&a, &b);
    let exact = |a: i64, b: i64| {
        debug_assert_eq!(a % b, 0);
        a / b
    };
    let v = match *spec {
        GroupSpec::ProdDihedral { n, .. } | GroupSpec::Index2Diagonal { n, .. } => {
            if m % n != 1 % n {
                2 * fl(m - 1, n) + 2
            } else {
                2 * exact(m - 1, n) + 2
            }
        }
        GroupSpec::ProdTetrahedral { .. } => match m % 6 {
            5 => 4 * fl(m - 1, 3) - m + 3,
            _ => exact(m - 1, 3) + 2,
        },
        GroupSpec::ProdOctahedral { .. } => match m % 12 {
            11 => 2 * fl(m - 1, 3) + 2 * fl(m - 1, 4) - m + 3,
            7 => 2 * fl(m - 1, 4) + exact(1 - m, 3) + 2,
            5 => 2 * fl(m - 1, 3) + exact(1 - m, 2) + 2,
            _ => exact(m - 1, 6) + 2,
        },
        GroupSpec::ProdIcosahedral { .. } => match m % 30 {
            17 | 23 | 29 => 2 * fl(m - 1, 3) + 2 * fl(m - 1, 5) - m + 3,
            7 | 13 | 19 => 2 * fl(m - 1, 5) + exact(1 - m, 3) + 2,
            11 => 2 * fl(m - 1, 3) + exact(3 * (1 - m), 5) + 2,
            _ => exact(m - 1, 15) + 2,
        },
        GroupSpec::Index3Diagonal { .. } => exact(m, 3) + 1,
        GroupSpec::Cyclic { .. } => unreachable!(),
    };
    Ok(v)
}

/// `(2/|Γ'|)·Σ_{γ∈Γ'} χ_ρ(γ)` before snapping, with `Γ'` the subgroup
/// generated without the fiber rotation.
pub fn character_average(spec: &GroupSpec, m: i64) -> Result<Complex64> {
    let group = gamma_prime(spec)?;
    let mut sum = Complex64::new(0.0, 0.0);
    for g in &group.elements {
        let (a, b) = g.eigen_angles()?;
        sum += char_rho(Complex64::from_polar(1.0, a), Complex64::from_polar(1.0, b), m);
    }
    Ok(sum * (2.0 / group.order() as f64))
}

pub fn dim_sfk(spec: &GroupSpec, tol: f64) -> Result<DeformationReport> {
    let closed = closed_form_expression(spec)?;
    let m = spec.m().expect("checked by closed_form_expression");
    let two_b_minus_2 = 2 * b_gamma(spec)?.value - 2;
    if m == 1 {
        return Ok(DeformationReport {
            brute: 0,
            closed,
            two_b_minus_2,
            applicable: false,
            agreement: true,
            residual: 0.0,
        });
    }
    let avg = character_average(spec, m)?;
    let rounded = avg.re.round();
    let residual = avg.im.abs().max((avg.re - rounded).abs());
    if residual > tol {
        return Err(InvariantError::SnapFailure {
            what: format!("{spec}: character sum {avg}"),
            residual,
            tol,
        }
        .into());
    }
    let brute = rounded as i64;
    Ok(DeformationReport {
        brute,
        closed,
        two_b_minus_2,
        applicable: true,
        agreement: brute == closed && closed == two_b_minus_2,
        residual,
    })
}

/// `|Σ_{j=1}^{n−1} sin(2πkj/n)·cot(πj/n) + 2n·((k/n))|`.
pub fn eisenstein_check(n: i64, k: i64) -> f64 {
    let nf = n as f64;
    let lhs: f64 = (1..n)
        .map(|j| {
            let j = j as f64;
            (2.0 * PI * k as f64 * j / nf).sin() / (PI * j / nf).tan()
        })
        .sum();
    let s = sawtooth(Ratio::new(k, n));
    let rhs = -2.0 * nf * (*s.numer() as f64 / *s.denom() as f64);
    (lhs - rhs).abs()
}
