//! Quaternion arithmetic and the dictionary between quaternion pairs,
//! 2×2 unitary matrices and Möbius maps of the Hopf base.
//!
//! `ℂ²` is identified with `ℍ` by `(z1, z2) ↦ z1 + z2·ĵ`, where `z = a + b·î`.
//! A pair `[α, β]` acts by `h ↦ α·h·β`; the left factor is always a point
//! `e^{iθ}` of the î-circle, so it acts on `ℂ²` as the scalar `e^{iθ}` and the
//! right factor `β = h1 + h2·ĵ` acts through `[[h1, −h̄2], [h2, h̄1]]`.
//! Composition is `[α2, β2]∘[α1, β1] = [α2·α1, β1·β2]`, which makes
//! [`GroupElement::to_matrix`] a homomorphism.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::ops::{Mul, Neg};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Tolerance for unit-norm checks and approximate equality of elements.
pub const EQ_TOL: f64 = 1e-9;
/// Grid spacing used when hashing element coordinates.
pub const HASH_GRID: f64 = 1e-6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QuaternionError {
    #[error("left factor {0} is not of the form e^(i·theta)")]
    NonCircleLeftFactor(Quaternion),
    #[error("quaternion {0} is not a unit quaternion")]
    NotUnit(Quaternion),
    #[error("hopf projection of (0, 0) is undefined")]
    BothZero,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Quaternion {
    pub x0: f64,
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

impl Quaternion {
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(x0: f64, x1: f64, x2: f64, x3: f64) -> Self {
        Quaternion { x0, x1, x2, x3 }
    }

    /// `e^{iθ} = cos θ + sin θ·î`.
    pub fn circle(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Quaternion::new(c, s, 0.0, 0.0)
    }

    /// Builds `h1 + h2·ĵ`.
    pub fn from_complex_pair(h1: Complex64, h2: Complex64) -> Self {
        // (a + b·î)·ĵ = a·ĵ + b·k̂
        Quaternion::new(h1.re, h1.im, h2.re, h2.im)
    }

    /// Splits `self` as `h1 + h2·ĵ`.
    pub fn complex_pair(&self) -> (Complex64, Complex64) {
        (
            Complex64::new(self.x0, self.x1),
            Complex64::new(self.x2, self.x3),
        )
    }

    pub fn conj(&self) -> Self {
        Quaternion::new(self.x0, -self.x1, -self.x2, -self.x3)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.x0 * self.x0 + self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn is_unit(&self, tol: f64) -> bool {
        (self.norm() - 1.0).abs() <= tol
    }

    /// True when `self` lies in the î-plane, i.e. has the form `r·e^{iθ}`.
    pub fn is_circle(&self, tol: f64) -> bool {
        self.x2.abs() <= tol && self.x3.abs() <= tol
    }

    pub fn coords(&self) -> [f64; 4] {
        [self.x0, self.x1, self.x2, self.x3]
    }

    pub fn approx_eq(&self, other: &Quaternion, tol: f64) -> bool {
        self.coords()
            .iter()
            .zip(other.coords().iter())
            .all(|(a, b)| (a - b).abs() <= tol)
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;

    fn mul(self, r: Quaternion) -> Quaternion {
        let l = self;
        Quaternion::new(
            l.x0 * r.x0 - l.x1 * r.x1 - l.x2 * r.x2 - l.x3 * r.x3,
            l.x0 * r.x1 + l.x1 * r.x0 + l.x2 * r.x3 - l.x3 * r.x2,
            l.x0 * r.x2 - l.x1 * r.x3 + l.x2 * r.x0 + l.x3 * r.x1,
            l.x0 * r.x3 + l.x1 * r.x2 - l.x2 * r.x1 + l.x3 * r.x0,
        )
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;

    fn neg(self) -> Quaternion {
        Quaternion::new(-self.x0, -self.x1, -self.x2, -self.x3)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({:.6} + {:.6}i + {:.6}j + {:.6}k)",
            self.x0, self.x1, self.x2, self.x3
        )
    }
}

/// Hash key of a group element: canonical coordinates rounded to [`HASH_GRID`].
pub type ElementKey = [i64; 8];

/// The element `φ(α, β)`, stored as a pair of unit quaternions.
///
/// `[α, β]` and `[−α, −β]` are the same element; `PartialEq` respects this.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct GroupElement {
    pub left: Quaternion,
    pub right: Quaternion,
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement {
        left: Quaternion::ONE,
        right: Quaternion::ONE,
    };

    pub fn new(left: Quaternion, right: Quaternion) -> Result<Self, QuaternionError> {
        if !left.is_unit(EQ_TOL) {
            return Err(QuaternionError::NotUnit(left));
        }
        if !right.is_unit(EQ_TOL) {
            return Err(QuaternionError::NotUnit(right));
        }
        Ok(GroupElement { left, right })
    }

    /// `[e^{iθ}, β]`; panics only if `β` is not a unit quaternion.
    pub fn circle_pair(theta: f64, right: Quaternion) -> Self {
        GroupElement::new(Quaternion::circle(theta), right).expect("unit right factor")
    }

    /// `self ∘ rhs`: apply `rhs` first.
    pub fn compose(&self, rhs: &GroupElement) -> GroupElement {
        GroupElement {
            left: self.left * rhs.left,
            right: rhs.right * self.right,
        }
    }

    pub fn inverse(&self) -> GroupElement {
        GroupElement {
            left: self.left.conj(),
            right: self.right.conj(),
        }
    }

    pub fn pow(&self, k: u64) -> GroupElement {
        let mut acc = GroupElement::IDENTITY;
        let mut base = *self;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            k >>= 1;
        }
        acc
    }

    /// Representative with the first non-negligible coordinate of `α` positive.
    pub fn canonical(&self) -> GroupElement {
        let lead = self
            .left
            .coords()
            .into_iter()
            .find(|x| x.abs() > EQ_TOL)
            .unwrap_or(0.0);
        if lead < 0.0 {
            GroupElement {
                left: -self.left,
                right: -self.right,
            }
        } else {
            *self
        }
    }

    pub fn canonical_coords(&self) -> [f64; 8] {
        let c = self.canonical();
        let (l, r) = (c.left.coords(), c.right.coords());
        [l[0], l[1], l[2], l[3], r[0], r[1], r[2], r[3]]
    }

    pub fn key(&self) -> ElementKey {
        self.canonical_coords().map(grid_round)
    }

    pub fn approx_eq(&self, other: &GroupElement, tol: f64) -> bool {
        let same = self.left.approx_eq(&other.left, tol) && self.right.approx_eq(&other.right, tol);
        same || (self.left.approx_eq(&-other.left, tol) && self.right.approx_eq(&-other.right, tol))
    }

    pub fn is_identity(&self) -> bool {
        self.approx_eq(&GroupElement::IDENTITY, EQ_TOL)
    }

    fn circle_angle(&self) -> Result<f64, QuaternionError> {
        if !self.left.is_circle(EQ_TOL) {
            return Err(QuaternionError::NonCircleLeftFactor(self.left));
        }
        Ok(self.left.x1.atan2(self.left.x0))
    }

    pub fn to_matrix(&self) -> Result<U2Matrix, QuaternionError> {
        let theta = self.circle_angle()?;
        let scale = Complex64::from_polar(1.0, theta);
        let (h1, h2) = self.right.complex_pair();
        Ok(U2Matrix {
            m: [
                [scale * h1, -scale * h2.conj()],
                [scale * h2, scale * h1.conj()],
            ],
        })
    }

    /// Eigenvalue angles of the matrix, each in `[0, 2π)`, sorted ascending.
    ///
    /// Computed from `θ ± φ` where `e^{iθ}` is the left factor and `e^{±iφ}`
    /// are the eigenvalues of the SU(2) part; this avoids the square-root
    /// loss of the characteristic polynomial near repeated eigenvalues.
    pub fn eigen_angles(&self) -> Result<(f64, f64), QuaternionError> {
        let theta = self.circle_angle()?;
        let r = &self.right;
        let imag = (r.x1 * r.x1 + r.x2 * r.x2 + r.x3 * r.x3).sqrt();
        let phi = imag.atan2(r.x0);
        let a = normalize_angle(theta + phi);
        let b = normalize_angle(theta - phi);
        Ok(if a <= b { (a, b) } else { (b, a) })
    }

    /// Eigenvalues as unit complex numbers, ordered as [`Self::eigen_angles`].
    pub fn eigenvalues(&self) -> Result<(Complex64, Complex64), QuaternionError> {
        let (a, b) = self.eigen_angles()?;
        Ok((Complex64::from_polar(1.0, a), Complex64::from_polar(1.0, b)))
    }

    pub fn mobius(&self) -> Mobius {
        let (h1, h2) = self.right.complex_pair();
        Mobius { h1, h2 }
    }

    /// `Π([e^{iθ}, h]) = [1, h]`.
    pub fn project_su2(&self) -> Result<GroupElement, QuaternionError> {
        self.circle_angle()?;
        Ok(GroupElement {
            left: Quaternion::ONE,
            right: self.right,
        })
    }

    pub fn apply(&self, z: (Complex64, Complex64)) -> Result<(Complex64, Complex64), QuaternionError> {
        Ok(self.to_matrix()?.apply(z))
    }
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.approx_eq(other, EQ_TOL)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.left, self.right)
    }
}

fn grid_round(x: f64) -> i64 {
    (x / HASH_GRID).round() as i64
}

/// Angle reduced to `[0, 2π)`, with values a hair below `2π` folded to `0`.
pub fn normalize_angle(a: f64) -> f64 {
    let r = a.rem_euclid(TAU);
    if TAU - r < 1e-12 {
        0.0
    } else {
        r
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct U2Matrix {
    pub m: [[Complex64; 2]; 2],
}

impl U2Matrix {
    pub fn identity() -> Self {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        U2Matrix {
            m: [[one, zero], [zero, one]],
        }
    }

    pub fn diag(a: Complex64, b: Complex64) -> Self {
        let zero = Complex64::new(0.0, 0.0);
        U2Matrix {
            m: [[a, zero], [zero, b]],
        }
    }

    pub fn det(&self) -> Complex64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn trace(&self) -> Complex64 {
        self.m[0][0] + self.m[1][1]
    }

    pub fn apply(&self, z: (Complex64, Complex64)) -> (Complex64, Complex64) {
        (
            self.m[0][0] * z.0 + self.m[0][1] * z.1,
            self.m[1][0] * z.0 + self.m[1][1] * z.1,
        )
    }

    pub fn adjoint(&self) -> Self {
        let m = &self.m;
        U2Matrix {
            m: [
                [m[0][0].conj(), m[1][0].conj()],
                [m[0][1].conj(), m[1][1].conj()],
            ],
        }
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        (*self * self.adjoint()).approx_eq(&U2Matrix::identity(), tol)
    }

    pub fn approx_eq(&self, other: &U2Matrix, tol: f64) -> bool {
        (0..2).all(|i| (0..2).all(|j| (self.m[i][j] - other.m[i][j]).norm() <= tol))
    }
}

impl Mul for U2Matrix {
    type Output = U2Matrix;

    fn mul(self, r: U2Matrix) -> U2Matrix {
        let a = &self.m;
        let b = &r.m;
        let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        U2Matrix { m: out }
    }
}

/// A point of the Hopf base `S² = ℂ ∪ {∞}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum RiemannPoint {
    Finite(Complex64),
    Infinity,
}

impl RiemannPoint {
    pub fn finite(re: f64, im: f64) -> Self {
        RiemannPoint::Finite(Complex64::new(re, im))
    }

    /// Chordal distance on the unit sphere; `2` between antipodes.
    pub fn chordal_distance(&self, other: &RiemannPoint) -> f64 {
        match (self, other) {
            (RiemannPoint::Infinity, RiemannPoint::Infinity) => 0.0,
            (RiemannPoint::Finite(w), RiemannPoint::Infinity)
            | (RiemannPoint::Infinity, RiemannPoint::Finite(w)) => 2.0 / (1.0 + w.norm_sqr()).sqrt(),
            (RiemannPoint::Finite(a), RiemannPoint::Finite(b)) => {
                2.0 * (a - b).norm() / ((1.0 + a.norm_sqr()) * (1.0 + b.norm_sqr())).sqrt()
            }
        }
    }

    pub fn approx_eq(&self, other: &RiemannPoint, tol: f64) -> bool {
        self.chordal_distance(other) <= tol
    }
}

impl fmt::Display for RiemannPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RiemannPoint::Finite(w) => write!(f, "{:.6}{:+.6}i", w.re, w.im),
            RiemannPoint::Infinity => write!(f, "∞"),
        }
    }
}

/// `𝓗(z1, z2) = z1 / z2`.
pub fn hopf_project(z1: Complex64, z2: Complex64) -> Result<RiemannPoint, QuaternionError> {
    if z1 == Complex64::new(0.0, 0.0) && z2 == Complex64::new(0.0, 0.0) {
        return Err(QuaternionError::BothZero);
    }
    if z2 == Complex64::new(0.0, 0.0) {
        return Ok(RiemannPoint::Infinity);
    }
    Ok(RiemannPoint::Finite(z1 / z2))
}

/// `w ↦ (h1·w − h̄2) / (h2·w + h̄1)`, induced on the Hopf base by `[·, h1 + h2·ĵ]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mobius {
    pub h1: Complex64,
    pub h2: Complex64,
}

impl Mobius {
    pub fn apply(&self, w: RiemannPoint) -> RiemannPoint {
        let (a, b, c, d) = (self.h1, -self.h2.conj(), self.h2, self.h1.conj());
        match w {
            RiemannPoint::Infinity => {
                if c.norm() <= EQ_TOL * a.norm() {
                    RiemannPoint::Infinity
                } else {
                    RiemannPoint::Finite(a / c)
                }
            }
            RiemannPoint::Finite(w) => {
                let num = a * w + b;
                let den = c * w + d;
                if den.norm() <= 1e-13 * num.norm() {
                    RiemannPoint::Infinity
                } else {
                    RiemannPoint::Finite(num / den)
                }
            }
        }
    }

    /// True when the map is the identity of the sphere (`β = ±1`).
    pub fn is_identity(&self) -> bool {
        self.h2.norm() <= EQ_TOL && self.h1.im.abs() <= EQ_TOL
    }

    /// Roots of `h2·w² + (h̄1 − h1)·w + h̄2 = 0`; `{0, ∞}` when `h2 = 0`.
    /// Empty for the identity map.
    pub fn fixed_points(&self) -> Vec<RiemannPoint> {
        if self.is_identity() {
            return Vec::new();
        }
        if self.h2.norm() <= EQ_TOL {
            return vec![RiemannPoint::finite(0.0, 0.0), RiemannPoint::Infinity];
        }
        let y = self.h1.im;
        let s = (y * y + self.h2.norm_sqr()).sqrt();
        // w = i(y ± s)/h2; the small root is rewritten to avoid cancellation.
        let big = if y >= 0.0 { y + s } else { y - s };
        let small = -self.h2.norm_sqr() / big;
        let i = Complex64::new(0.0, 1.0);
        vec![
            RiemannPoint::Finite(i * big / self.h2),
            RiemannPoint::Finite(i * small / self.h2),
        ]
    }
}

/// `e^{2πi·k/n}` as a unit complex number.
pub fn root_of_unity(k: i64, n: i64) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * (k as f64) / (n as f64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn basis_products() {
        let (i, j, k) = (Quaternion::I, Quaternion::J, Quaternion::K);
        let minus_one = -Quaternion::ONE;
        assert!((i * i).approx_eq(&minus_one, 0.0));
        assert!((j * j).approx_eq(&minus_one, 0.0));
        assert!((k * k).approx_eq(&minus_one, 0.0));
        assert!((i * j * k).approx_eq(&minus_one, 0.0));
        assert!((i * j).approx_eq(&k, 0.0));
    }

    #[test]
    fn compose_examples() {
        let g = GroupElement::circle_pair(0.3, Quaternion::new(0.5, 0.5, 0.5, 0.5));
        assert_eq!(GroupElement::IDENTITY.compose(&g), g);

        let j = GroupElement::new(Quaternion::ONE, Quaternion::J).unwrap();
        let jj = j.compose(&j);
        assert!(jj.approx_eq(&GroupElement::new(Quaternion::ONE, -Quaternion::ONE).unwrap(), 1e-15));
        // [1,-1] is -Id, which differs from the identity.
        assert!(!jj.is_identity());

        let m = 7.0;
        let a = GroupElement::circle_pair(PI / m, Quaternion::ONE);
        assert_eq!(a.compose(&a), GroupElement::circle_pair(2.0 * PI / m, Quaternion::ONE));
    }

    #[test]
    fn kernel_equality() {
        let g = GroupElement::circle_pair(0.7, Quaternion::J);
        let neg = GroupElement {
            left: -g.left,
            right: -g.right,
        };
        assert_eq!(g, neg);
        assert_eq!(g.key(), neg.key());
        let half = GroupElement {
            left: g.left,
            right: -g.right,
        };
        assert_ne!(g, half);
    }

    #[test]
    fn matrix_of_j_and_cyclic_generator() {
        let j = GroupElement::new(Quaternion::ONE, Quaternion::J).unwrap();
        let expect = U2Matrix {
            m: [[c(0.0, 0.0), c(-1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]],
        };
        assert!(j.to_matrix().unwrap().approx_eq(&expect, 1e-15));

        // L(3,5): 2k ≡ 4 mod 5, k = 2.
        let (q, p, k) = (3_i64, 5_i64, 2_i64);
        let g = GroupElement::new(
            Quaternion::circle(2.0 * PI * k as f64 / p as f64),
            Quaternion::circle(2.0 * PI * (1 - k) as f64 / p as f64),
        )
        .unwrap();
        let expect = U2Matrix::diag(root_of_unity(1, p), root_of_unity(q, p));
        assert!(g.to_matrix().unwrap().approx_eq(&expect, 1e-12));
        assert!(GroupElement::IDENTITY
            .to_matrix()
            .unwrap()
            .approx_eq(&U2Matrix::identity(), 0.0));
    }

    #[test]
    fn non_circle_left_factor_is_rejected() {
        let g = GroupElement::new(Quaternion::J, Quaternion::ONE).unwrap();
        assert!(matches!(g.to_matrix(), Err(QuaternionError::NonCircleLeftFactor(_))));
        assert!(g.project_su2().is_err());
        assert!(g.eigen_angles().is_err());
    }

    #[test]
    fn eigen_angle_examples() {
        let n = 5.0;
        let g = GroupElement::circle_pair(0.0, Quaternion::circle(PI / n));
        let (a, b) = g.eigen_angles().unwrap();
        assert!((a - PI / n).abs() < 1e-12);
        assert!((b - (TAU - PI / n)).abs() < 1e-12);

        let j = GroupElement::new(Quaternion::ONE, Quaternion::J).unwrap();
        let (a, b) = j.eigen_angles().unwrap();
        assert!((a - PI / 2.0).abs() < 1e-12 && (b - 1.5 * PI).abs() < 1e-12);

        assert_eq!(GroupElement::IDENTITY.eigen_angles().unwrap(), (0.0, 0.0));
    }

    #[test]
    fn hopf_examples() {
        assert_eq!(hopf_project(c(0.0, 0.0), c(1.0, 0.0)).unwrap(), RiemannPoint::finite(0.0, 0.0));
        assert_eq!(hopf_project(c(1.0, 0.0), c(0.0, 0.0)).unwrap(), RiemannPoint::Infinity);
        assert_eq!(hopf_project(c(0.0, 0.0), c(0.0, 0.0)), Err(QuaternionError::BothZero));

        let w = c(0.4, -1.3);
        let theta: f64 = 0.9;
        let s = Complex64::from_polar(1.0, theta) / (w.norm_sqr() + 1.0).sqrt();
        let p = hopf_project(s * w, s).unwrap();
        assert!(p.approx_eq(&RiemannPoint::Finite(w), 1e-12));
    }

    #[test]
    fn mobius_examples() {
        let w = RiemannPoint::finite(0.3, 0.8);
        let fiber = GroupElement::circle_pair(1.1, Quaternion::ONE).mobius();
        assert!(fiber.apply(w).approx_eq(&w, 1e-12));
        assert!(fiber.is_identity());

        let p = 5.0;
        let rot = GroupElement::circle_pair(0.0, Quaternion::circle(PI / p)).mobius();
        let expect = Complex64::from_polar(1.0, 2.0 * PI / p) * c(0.3, 0.8);
        assert!(rot.apply(w).approx_eq(&RiemannPoint::Finite(expect), 1e-12));
        let fixed = rot.fixed_points();
        assert!(fixed[0].approx_eq(&RiemannPoint::finite(0.0, 0.0), 0.0));
        assert_eq!(fixed[1], RiemannPoint::Infinity);

        let j = GroupElement::new(Quaternion::ONE, Quaternion::J).unwrap().mobius();
        let expect = -c(1.0, 0.0) / c(0.3, 0.8);
        assert!(j.apply(w).approx_eq(&RiemannPoint::Finite(expect), 1e-12));
        assert_eq!(j.apply(RiemannPoint::finite(0.0, 0.0)), RiemannPoint::Infinity);
        for f in j.fixed_points() {
            assert!(j.apply(f).approx_eq(&f, 1e-12));
        }
    }

    #[test]
    fn project_su2_examples() {
        let m = 5.0;
        let g = GroupElement::circle_pair(PI / m, Quaternion::J);
        assert_eq!(g.project_su2().unwrap(), GroupElement::new(Quaternion::ONE, Quaternion::J).unwrap());

        let h = Quaternion::new(-0.5, -0.5, -0.5, 0.5);
        let g = GroupElement::circle_pair(PI / (3.0 * m), h);
        let p = g.project_su2().unwrap();
        assert_eq!(p, GroupElement::new(Quaternion::ONE, h).unwrap());
        let w = RiemannPoint::finite(-0.2, 0.45);
        assert!(p.mobius().apply(w).approx_eq(&g.mobius().apply(w), 1e-12));

        let su2 = GroupElement::new(Quaternion::ONE, h).unwrap();
        assert_eq!(su2.project_su2().unwrap(), su2);
    }

    #[test]
    fn pow_matches_repeated_compose() {
        let g = GroupElement::circle_pair(PI / 9.0, Quaternion::new(0.5, 0.5, 0.5, -0.5));
        let mut acc = GroupElement::IDENTITY;
        for _ in 0..7 {
            acc = acc.compose(&g);
        }
        assert_eq!(g.pow(7), acc);
        assert!(g.pow(0).is_identity());
    }
}
