//! Independent reference computations shared by the integration tests.
//! Nothing here calls into the library's own versions of the same formulas.
#![allow(dead_code)]

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{Signed, Zero};

use spherequot::catalog::{FiniteGroup, GroupSpec};
use spherequot::quaternion::GroupElement;

/// Group orders transcribed from the classification table.
pub fn table_order(spec: &GroupSpec) -> i64 {
    match *spec {
        GroupSpec::Cyclic { p, .. } => p,
        GroupSpec::ProdDihedral { m, n } => 4 * m * n,
        GroupSpec::ProdTetrahedral { m } => 24 * m,
        GroupSpec::ProdOctahedral { m } => 48 * m,
        GroupSpec::ProdIcosahedral { m } => 120 * m,
        GroupSpec::Index2Diagonal { m, n } => 4 * m * n,
        GroupSpec::Index3Diagonal { m } => 24 * m,
    }
}

/// Orbifold groups `(α, β)` of the singularity table, before normalization.
pub fn theorem_table(spec: &GroupSpec) -> Vec<(i64, i64)> {
    match *spec {
        GroupSpec::ProdDihedral { m, n } | GroupSpec::Index2Diagonal { m, n } => vec![(1, 2), (1, 2), (-m, n)],
        GroupSpec::ProdTetrahedral { m } => vec![(1, 2), (-m, 3), (-m, 3)],
        GroupSpec::ProdOctahedral { m } => vec![(1, 2), (-m, 3), (-m, 4)],
        GroupSpec::ProdIcosahedral { m } => vec![(1, 2), (-m, 3), (-m, 5)],
        GroupSpec::Index3Diagonal { .. } => vec![(1, 2), (1, 3), (2, 3)],
        GroupSpec::Cyclic { .. } => vec![],
    }
}

/// `(m, h)` with `h` the order of the image in PGL(2, C).
pub fn m_and_h(spec: &GroupSpec) -> (i64, i64) {
    match *spec {
        GroupSpec::ProdDihedral { m, n } | GroupSpec::Index2Diagonal { m, n } => (m, 2 * n),
        GroupSpec::ProdTetrahedral { m } | GroupSpec::Index3Diagonal { m } => (m, 12),
        GroupSpec::ProdOctahedral { m } => (m, 24),
        GroupSpec::ProdIcosahedral { m } => (m, 60),
        GroupSpec::Cyclic { .. } => panic!("cyclic spec has no (m, h)"),
    }
}

/// Every valid spec in the box, from the table conditions directly.
pub fn all_specs(m_max: i64, n_max: i64, p_max: i64) -> Vec<GroupSpec> {
    let mut v = Vec::new();
    for p in 2..=p_max {
        for q in 1..p {
            if q.gcd(&p) == 1 {
                v.push(GroupSpec::Cyclic { q, p });
            }
        }
    }
    for m in 1..=m_max {
        for n in 1..=n_max {
            if m.gcd(&(2 * n)) == 1 {
                v.push(GroupSpec::ProdDihedral { m, n });
            }
            if m % 2 == 0 && m.gcd(&n) == 1 {
                v.push(GroupSpec::Index2Diagonal { m, n });
            }
        }
        if m.gcd(&6) == 1 {
            v.push(GroupSpec::ProdTetrahedral { m });
            v.push(GroupSpec::ProdOctahedral { m });
        }
        if m.gcd(&30) == 1 {
            v.push(GroupSpec::ProdIcosahedral { m });
        }
        if m.gcd(&6) == 3 {
            v.push(GroupSpec::Index3Diagonal { m });
        }
    }
    v
}

/// Non-cyclic specs in the box; `n = 1` dihedral-type groups are cyclic.
pub fn non_cyclic_specs(m_max: i64, n_max: i64) -> Vec<GroupSpec> {
    all_specs(m_max, n_max, 1)
        .into_iter()
        .filter(|s| match *s {
            GroupSpec::Cyclic { .. } => false,
            GroupSpec::ProdDihedral { n, .. } | GroupSpec::Index2Diagonal { n, .. } => n > 1,
            _ => true,
        })
        .collect()
}

pub fn qmul(a: [f64; 4], b: [f64; 4]) -> [f64; 4] {
    [
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
        a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
        a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
    ]
}

/// `(z1, z2) ↦ z1 + z2·ĵ` as real coordinates.
pub fn to_quat(z1: Complex64, z2: Complex64) -> [f64; 4] {
    [z1.re, z1.im, z2.re, z2.im]
}

pub fn from_quat(q: [f64; 4]) -> (Complex64, Complex64) {
    (Complex64::new(q[0], q[1]), Complex64::new(q[2], q[3]))
}

/// The action `h ↦ α·h·β` on `H = C²`, computed with raw quaternion products.
pub fn act(g: &GroupElement, z: (Complex64, Complex64)) -> (Complex64, Complex64) {
    from_quat(qmul(qmul(g.left.coords(), to_quat(z.0, z.1)), g.right.coords()))
}

/// The 2×2 complex matrix of `g`, reconstructed from its action on a basis.
pub fn matrix_of(g: &GroupElement) -> [[Complex64; 2]; 2] {
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let c0 = act(g, (one, zero));
    let c1 = act(g, (zero, one));
    [[c0.0, c1.0], [c0.1, c1.1]]
}

/// Eigenvalues from the characteristic polynomial.
pub fn eigenpair(g: &GroupElement) -> (Complex64, Complex64) {
    let m = matrix_of(g);
    let tr = m[0][0] + m[1][1];
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    let disc = (tr * tr - det * 4.0).sqrt();
    ((tr + disc) / 2.0, (tr - disc) / 2.0)
}

/// Angles in full turns, each rounded to a fraction with denominator
/// dividing `den`; sorted.
pub fn eigen_turns(g: &GroupElement, den: i64) -> (Ratio<i64>, Ratio<i64>) {
    let (a, b) = eigenpair(g);
    let turn = |z: Complex64| {
        let t = z.arg() / (2.0 * PI);
        let k = (t * den as f64).round() as i64;
        assert!((t * den as f64 - k as f64).abs() < 1e-6, "eigenvalue not a {den}-th root");
        Ratio::new(k.rem_euclid(den), den)
    };
    let (x, y) = (turn(a), turn(b));
    if x <= y {
        (x, y)
    } else {
        (y, x)
    }
}

/// Signature-operator η of `S³/Γ`: `(1/|Γ|) Σ_{g≠1} cot(a/2)·cot(b/2)`
/// over the eigen-angles `a, b` of each non-identity element.
pub fn eta_oracle(group: &FiniteGroup) -> f64 {
    let mut s = 0.0;
    for g in &group.elements {
        let (x, y) = eigenpair(g);
        if (x - 1.0).norm() < 1e-9 && (y - 1.0).norm() < 1e-9 {
            continue;
        }
        s += 1.0 / ((x.arg() / 2.0).tan() * (y.arg() / 2.0).tan());
    }
    s / group.order() as f64
}

/// Nearest rational with denominator at most `max_den`, if within `tol`.
pub fn snap(x: f64, max_den: i64, tol: f64) -> Option<Ratio<i64>> {
    (1..=max_den).find_map(|d| {
        let k = (x * d as f64).round();
        ((x * d as f64 - k).abs() < tol * d as f64).then(|| Ratio::new(k as i64, d))
    })
}

/// The modified Euclidean algorithm: `p = e₁q − a₁, q = e₂a₁ − a₂, …`.
/// Also returns the remainder sequence.
pub fn modified_euclid(q: i64, p: i64) -> (Vec<i64>, Vec<i64>) {
    let (mut num, mut den) = (p, q);
    let mut e = Vec::new();
    let mut rem = Vec::new();
    while den > 0 {
        let ei = (num + den - 1) / den;
        let a = ei * den - num;
        e.push(ei);
        rem.push(a);
        num = den;
        den = a;
    }
    (e, rem)
}

/// `1/(e₁ − 1/(e₂ − … − 1/e_k))` as an exact fraction.
pub fn cf_oracle(e: &[i64]) -> Ratio<i64> {
    let mut x = Ratio::from_integer(0);
    for &ei in e.iter().rev() {
        x = (Ratio::from_integer(ei) - x).recip();
    }
    x
}

/// Inertia `(positive, negative, zero)` of a symmetric integer matrix by
/// exact congruence diagonalization.
pub fn inertia_oracle(m: &[Vec<i64>]) -> (usize, usize, usize) {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect();
    let (mut pos, mut neg, mut zero) = (0, 0, 0);
    let mut k = 0;
    while k < n {
        if a[k][k].is_zero() {
            if let Some(i) = (k + 1..n).find(|&i| !a[i][i].is_zero()) {
                a.swap(k, i);
                for row in a.iter_mut() {
                    row.swap(k, i);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // Row/column k += row/column j makes the pivot 2·a[k][j].
                for c in 0..n {
                    let v = a[j][c].clone();
                    a[k][c] += v;
                }
                for r in 0..n {
                    let v = a[r][j].clone();
                    a[r][k] += v;
                }
            } else {
                zero += 1;
                k += 1;
                continue;
            }
        }
        let p = a[k][k].clone();
        if p.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &p;
            for j in k..n {
                let v = &f * &a[k][j];
                a[i][j] -= v;
            }
        }
        for i in k + 1..n {
            a[k][i] = BigRational::zero();
            a[i][k] = BigRational::zero();
        }
        k += 1;
    }
    (pos, neg, zero)
}

/// `χ_ρ` for eigenvalues `e^{i(θ₁±θ₂)}` in closed trigonometric form.
pub fn index_character(theta1: f64, theta2: f64, m: i64) -> Complex64 {
    let s = theta2.sin();
    let body = if s.abs() < 1e-9 {
        (2 * m - 1) as f64
    } else {
        (2.0 * (m - 1) as f64 * theta2).sin() * theta2.cos() / s + (2.0 * (m - 1) as f64 * theta2).cos()
    };
    Complex64::from_polar(1.0, 2.0 * m as f64 * theta1) * body
}

/// `(2/|Γ'|) Σ χ_ρ` evaluated through `index_character` and matrix eigenvalues.
pub fn deformation_oracle(gamma_prime: &FiniteGroup, m: i64) -> Complex64 {
    let mut s = Complex64::new(0.0, 0.0);
    for g in &gamma_prime.elements {
        let (x, y) = eigenpair(g);
        let (a, b) = (x.arg(), y.arg());
        s += index_character((a + b) / 2.0, (a - b) / 2.0, m);
    }
    s * (2.0 / gamma_prime.order() as f64)
}

pub fn sawtooth_f(x: f64) -> f64 {
    if (x - x.round()).abs() < 1e-12 {
        0.0
    } else {
        x - x.floor() - 0.5
    }
}
