//! Exact linear algebra on small symmetric integer matrices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Counts of positive, negative and zero eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn rank(&self) -> usize {
        self.positive + self.negative
    }

    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }

    pub fn add(&self, other: &Inertia) -> Inertia {
        Inertia {
            positive: self.positive + other.positive,
            negative: self.negative + other.negative,
            zero: self.zero + other.zero,
        }
    }
}

/// Inertia by symmetric congruence over the rationals (Sylvester's law).
pub fn inertia(matrix: &[Vec<i64>]) -> Inertia {
    let mut a: Vec<Vec<BigRational>> = matrix
        .iter()
        .map(|row| row.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let mut out = Inertia::default();
    while !a.is_empty() {
        let n = a.len();
        let pivot = match (0..n).find(|&i| !a[i][i].is_zero()) {
            Some(p) => p,
            None => match find_off_diagonal(&a) {
                Some((i, j)) => {
                    // Replace e_i by e_i + e_j; the new diagonal entry is 2·a_ij.
                    for k in 0..n {
                        let v = a[j][k].clone();
                        a[i][k] += v;
                    }
                    for k in 0..n {
                        let v = a[k][j].clone();
                        a[k][i] += v;
                    }
                    i
                }
                None => {
                    out.zero += n;
                    break;
                }
            },
        };
        let d = a[pivot][pivot].clone();
        if d.is_positive() {
            out.positive += 1;
        } else {
            out.negative += 1;
        }
        let rest: Vec<usize> = (0..n).filter(|&k| k != pivot).collect();
        let next = rest
            .iter()
            .map(|&r| {
                rest.iter()
                    .map(|&c| &a[r][c] - &a[r][pivot] * &a[pivot][c] / &d)
                    .collect()
            })
            .collect();
        a = next;
    }
    out
}

fn find_off_diagonal(a: &[Vec<BigRational>]) -> Option<(usize, usize)> {
    let n = a.len();
    (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| i != j && !a[i][j].is_zero())
}

/// Fraction-free Gaussian elimination with row swaps.
pub fn determinant(matrix: &[Vec<i64>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Determinants of the leading principal submatrices, sizes `1..=n`.
///
/// One Bareiss pass without pivoting yields them all; a vanishing minor
/// switches to computing the remaining ones separately.
pub fn leading_minors(matrix: &[Vec<i64>]) -> Vec<BigInt> {
    let n = matrix.len();
    let mut a: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut out = Vec::with_capacity(n);
    let mut prev = BigInt::one();
    for k in 0..n {
        out.push(a[k][k].clone());
        if a[k][k].is_zero() {
            for size in k + 2..=n {
                let sub: Vec<Vec<i64>> = matrix[..size].iter().map(|r| r[..size].to_vec()).collect();
                out.push(determinant(&sub));
            }
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    out
}

/// Sylvester's criterion: `(−1)^k D_k > 0` for every leading minor.
pub fn is_negative_definite(matrix: &[Vec<i64>]) -> bool {
    leading_minors(matrix)
        .iter()
        .enumerate()
        .all(|(i, d)| if i % 2 == 0 { d.is_negative() } else { d.is_positive() })
}

pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &(&r * &r) == n
}

pub fn is_symmetric(matrix: &[Vec<i64>]) -> bool {
    let n = matrix.len();
    matrix.iter().all(|r| r.len() == n)
        && (0..n).all(|i| (0..i).all(|j| matrix[i][j] == matrix[j][i]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inertia_examples() {
        let d4 = vec![
            vec![-2, 1, 1, 1],
            vec![1, -2, 0, 0],
            vec![1, 0, -2, 0],
            vec![1, 0, 0, -2],
        ];
        assert_eq!(inertia(&d4), Inertia { positive: 0, negative: 4, zero: 0 });
        assert_eq!(determinant(&d4), BigInt::from(4));
        assert!(is_negative_definite(&d4));

        let hyperbolic = vec![vec![0, 1], vec![1, 0]];
        assert_eq!(inertia(&hyperbolic), Inertia { positive: 1, negative: 1, zero: 0 });
        assert_eq!(determinant(&hyperbolic), BigInt::from(-1));
        assert!(!is_negative_definite(&hyperbolic));

        let degenerate = vec![vec![1, 1], vec![1, 1]];
        assert_eq!(inertia(&degenerate), Inertia { positive: 1, negative: 0, zero: 1 });
        assert_eq!(determinant(&degenerate), BigInt::zero());
    }

    #[test]
    fn squares() {
        assert!(is_perfect_square(&BigInt::from(0)));
        assert!(is_perfect_square(&BigInt::from(144)));
        assert!(!is_perfect_square(&BigInt::from(8)));
        assert!(!is_perfect_square(&BigInt::from(-4)));
    }
}
