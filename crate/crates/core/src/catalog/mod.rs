//! Generator tables, enumeration by closure, and structural checks.

mod cyclic;
mod spec;

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::f64::consts::TAU;

use num_integer::Integer;
use num_rational::Ratio;
use thiserror::Error;

pub use cyclic::{canonical_cyclic, mod_inverse, CyclicType};
pub use spec::{specs_in_range, Family, GroupSpec};

use crate::quaternion::{ElementKey, GroupElement, EQ_TOL, HASH_GRID};

/// Snap tolerance used when no caller-supplied tolerance is available.
pub const DEFAULT_SNAP_TOL: f64 = 1e-6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CatalogError {
    #[error("parameters violate the family condition: {0}")]
    InvalidParameters(GroupSpec),
    #[error("closure of {spec} exceeded {limit} elements (expected {expected})")]
    ClosureOverflow {
        spec: GroupSpec,
        expected: i64,
        limit: usize,
    },
    #[error("closure of {spec} has {found} elements, expected {expected}")]
    OrderMismatch {
        spec: GroupSpec,
        expected: i64,
        found: usize,
    },
    #[error("gcd({a}, {beta}) != 1")]
    NotCoprime { a: i64, beta: i64 },
    #[error("{what}: residual {residual:e} exceeds tolerance {tol:e}")]
    SnapFailure { what: String, residual: f64, tol: f64 },
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    NotApplicable(String),
}

/// Hash index over group elements that tolerates coordinates landing near a
/// rounding boundary of the hash grid.
#[derive(Debug, Clone, Default)]
pub struct ElementIndex {
    map: HashMap<ElementKey, usize>,
}

impl ElementIndex {
    pub fn insert(&mut self, g: &GroupElement, idx: usize) {
        self.map.insert(g.key(), idx);
    }

    pub fn get(&self, g: &GroupElement) -> Option<usize> {
        let coords = g.canonical_coords();
        let scaled = coords.map(|x| x / HASH_GRID);
        let base = scaled.map(|s| s.round() as i64);
        if let Some(&i) = self.map.get(&base) {
            return Some(i);
        }
        let ambiguous: Vec<(usize, i64)> = scaled
            .iter()
            .enumerate()
            .filter_map(|(i, &s)| {
                let d = s - s.round();
                (d.abs() > 0.3).then(|| (i, if d > 0.0 { 1 } else { -1 }))
            })
            .collect();
        for mask in 1u32..(1 << ambiguous.len()) {
            let mut key = base;
            for (bit, &(i, step)) in ambiguous.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    key[i] += step;
                }
            }
            if let Some(&i) = self.map.get(&key) {
                return Some(i);
            }
        }
        None
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

/// Breadth-first closure of `generators` under left multiplication.
/// Returns `Err(count)` as soon as more than `limit` elements appear.
pub fn closure(generators: &[GroupElement], limit: usize) -> Result<(Vec<GroupElement>, ElementIndex), usize> {
    let mut elements = vec![GroupElement::IDENTITY];
    let mut index = ElementIndex::default();
    index.insert(&GroupElement::IDENTITY, 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let x = elements[i];
        for g in generators {
            let y = g.compose(&x);
            if index.get(&y).is_none() {
                let j = elements.len();
                index.insert(&y, j);
                elements.push(y);
                if elements.len() > limit {
                    return Err(elements.len());
                }
                queue.push_back(j);
            }
        }
    }
    Ok((elements, index))
}

#[derive(Debug, Clone)]
pub struct FiniteGroup {
    pub spec: GroupSpec,
    pub generators: Vec<GroupElement>,
    pub elements: Vec<GroupElement>,
    index: ElementIndex,
}

impl FiniteGroup {
    /// Closure of arbitrary generators; `spec` is carried along for reporting.
    pub fn from_generators(
        spec: GroupSpec,
        generators: Vec<GroupElement>,
        limit: usize,
    ) -> Result<FiniteGroup, CatalogError> {
        let (elements, index) = closure(&generators, limit).map_err(|_| CatalogError::ClosureOverflow {
            spec,
            expected: spec.expected_order(),
            limit,
        })?;
        Ok(FiniteGroup {
            spec,
            generators,
            elements,
            index,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.index.get(g).is_some()
    }

    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        self.index.get(g)
    }

    /// Closed under composition and inverses, and contains the identity.
    pub fn is_closed(&self) -> bool {
        self.contains(&GroupElement::IDENTITY)
            && self.elements.iter().all(|x| {
                self.contains(&x.inverse()) && self.generators.iter().all(|g| self.contains(&g.compose(x)))
            })
    }
}

pub fn generators_of(spec: &GroupSpec) -> Result<Vec<GroupElement>, CatalogError> {
    spec.generators()
}

pub fn enumerate(spec: &GroupSpec) -> Result<FiniteGroup, CatalogError> {
    let generators = spec.generators()?;
    let expected = spec.expected_order();
    let group = FiniteGroup::from_generators(*spec, generators, 2 * expected as usize)?;
    if group.order() as i64 != expected {
        return Err(CatalogError::OrderMismatch {
            spec: *spec,
            expected,
            found: group.order(),
        });
    }
    Ok(group)
}

/// The subgroup generated by the table generators other than `[e^{πi/m}, 1]`.
pub fn gamma_prime(spec: &GroupSpec) -> Result<FiniteGroup, CatalogError> {
    if matches!(spec, GroupSpec::Cyclic { .. }) {
        return Err(CatalogError::NotApplicable(format!("{spec} has no fiber generator")));
    }
    let generators = spec.generators()?[1..].to_vec();
    let limit = 2 * spec.expected_order() as usize;
    FiniteGroup::from_generators(*spec, generators, limit)
}

/// No non-identity element has eigenvalue 1.
pub fn is_fixed_point_free(group: &FiniteGroup) -> Result<bool, CatalogError> {
    for g in &group.elements {
        if g.is_identity() {
            continue;
        }
        let (a, b) = g.eigen_angles().map_err(|e| CatalogError::NotApplicable(e.to_string()))?;
        let near_one = |t: f64| t.min(TAU - t) <= 1e-7;
        if near_one(a) || near_one(b) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Eigenvalue angles of `g` as fractions of a full turn with denominator `n`.
pub fn eigen_fractions(g: &GroupElement, n: i64, tol: f64) -> Result<(Ratio<i64>, Ratio<i64>), CatalogError> {
    let (a, b) = g.eigen_angles().map_err(|e| CatalogError::NotApplicable(e.to_string()))?;
    let snap = |t: f64| -> Result<Ratio<i64>, CatalogError> {
        let x = t / TAU * n as f64;
        let r = x.round();
        let residual = (x - r).abs();
        if residual > tol {
            return Err(CatalogError::SnapFailure {
                what: format!("eigen-angle of {g} over denominator {n}"),
                residual,
                tol,
            });
        }
        Ok(Ratio::new((r as i64).rem_euclid(n), n))
    };
    let (x, y) = (snap(a)?, snap(b)?);
    Ok(if x <= y { (x, y) } else { (y, x) })
}

/// Element order read off the eigenvalues; `n` must be a multiple of it.
pub fn element_order(g: &GroupElement, n: i64, tol: f64) -> Result<i64, CatalogError> {
    let (a, b) = eigen_fractions(g, n, tol)?;
    Ok(a.denom().lcm(b.denom()))
}

pub type EigenHistogram = BTreeMap<(Ratio<i64>, Ratio<i64>), usize>;

/// Counts of elements per eigenvalue pair, angles measured in full turns.
pub fn eigenvalue_histogram(group: &FiniteGroup) -> Result<EigenHistogram, CatalogError> {
    let n = group.order() as i64;
    let mut hist = EigenHistogram::new();
    for g in &group.elements {
        *hist.entry(eigen_fractions(g, n, DEFAULT_SNAP_TOL)?).or_insert(0) += 1;
    }
    Ok(hist)
}

/// An element whose order equals the group order, if one exists.
pub fn cyclic_generator(group: &FiniteGroup) -> Result<Option<GroupElement>, CatalogError> {
    let n = group.order() as i64;
    for g in &group.elements {
        if element_order(g, n, DEFAULT_SNAP_TOL)? == n {
            return Ok(Some(*g));
        }
    }
    Ok(None)
}

pub fn is_cyclic(group: &FiniteGroup) -> Result<bool, CatalogError> {
    Ok(cyclic_generator(group)?.is_some())
}

/// Lens type of a cyclic group, up to coordinate swap.
pub fn cyclic_type_of(group: &FiniteGroup) -> Result<CyclicType, CatalogError> {
    let p = group.order() as i64;
    let g = cyclic_generator(group)?
        .ok_or_else(|| CatalogError::NotApplicable(format!("{} is not cyclic", group.spec)))?;
    let (a, b) = eigen_fractions(&g, p, DEFAULT_SNAP_TOL)?;
    let (a, b) = ((*a.numer() * p / *a.denom()), (*b.numer() * p / *b.denom()));
    let inv = mod_inverse(a, p).ok_or(CatalogError::NotCoprime { a, beta: p })?;
    canonical_cyclic(b * inv, p)
}

/// Every element has determinant one.
pub fn is_special_unitary(group: &FiniteGroup) -> bool {
    group.elements.iter().all(|g| g.left.is_circle(EQ_TOL) && g.left.x1.abs() <= EQ_TOL)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternion::Quaternion;
    use std::f64::consts::PI;

    fn r(a: i64, b: i64) -> Ratio<i64> {
        Ratio::new(a, b)
    }

    #[test]
    fn small_orders() {
        assert_eq!(enumerate(&GroupSpec::ProdTetrahedral { m: 1 }).unwrap().order(), 24);
        assert_eq!(enumerate(&GroupSpec::ProdDihedral { m: 1, n: 2 }).unwrap().order(), 8);
        assert_eq!(enumerate(&GroupSpec::Cyclic { q: 3, p: 5 }).unwrap().order(), 5);
        assert_eq!(enumerate(&GroupSpec::Index3Diagonal { m: 3 }).unwrap().order(), 72);
        assert_eq!(enumerate(&GroupSpec::ProdIcosahedral { m: 7 }).unwrap().order(), 840);
    }

    #[test]
    fn closure_properties() {
        let g = enumerate(&GroupSpec::Index2Diagonal { m: 4, n: 3 }).unwrap();
        assert!(g.is_closed());
        assert_eq!(g.order(), 48);
    }

    #[test]
    fn overflow_is_reported() {
        let spec = GroupSpec::ProdOctahedral { m: 1 };
        let gens = spec.generators().unwrap();
        assert!(matches!(
            FiniteGroup::from_generators(spec, gens, 10),
            Err(CatalogError::ClosureOverflow { .. })
        ));
    }

    #[test]
    fn freeness() {
        let q8 = enumerate(&GroupSpec::ProdDihedral { m: 1, n: 2 }).unwrap();
        assert!(is_fixed_point_free(&q8).unwrap());
        // diag(1, e^{2πi/3})
        let refl = GroupElement::circle_pair(PI / 3.0, Quaternion::circle(-PI / 3.0));
        let spec = GroupSpec::Cyclic { q: 1, p: 3 };
        let g = FiniteGroup::from_generators(spec, vec![refl], 10).unwrap();
        assert_eq!(g.order(), 3);
        assert!(!is_fixed_point_free(&g).unwrap());
    }

    #[test]
    fn tetrahedral_histogram() {
        let t = enumerate(&GroupSpec::ProdTetrahedral { m: 1 }).unwrap();
        let h = eigenvalue_histogram(&t).unwrap();
        let expect: EigenHistogram = [
            ((r(0, 1), r(0, 1)), 1),
            ((r(1, 2), r(1, 2)), 1),
            ((r(1, 4), r(3, 4)), 6),
            ((r(1, 6), r(5, 6)), 8),
            ((r(1, 3), r(2, 3)), 8),
        ]
        .into_iter()
        .collect();
        assert_eq!(h, expect);
    }

    #[test]
    fn cyclic_detection() {
        let c = enumerate(&GroupSpec::Cyclic { q: 3, p: 5 }).unwrap();
        assert!(is_cyclic(&c).unwrap());
        assert!(cyclic_type_of(&c).unwrap().conjugate_equivalent(&CyclicType { alpha: 3, beta: 5 }));
        let q8 = enumerate(&GroupSpec::ProdDihedral { m: 1, n: 2 }).unwrap();
        assert!(!is_cyclic(&q8).unwrap());
        assert!(is_special_unitary(&q8));
        let d = enumerate(&GroupSpec::ProdDihedral { m: 3, n: 1 }).unwrap();
        assert!(is_cyclic(&d).unwrap());
        assert!(!is_special_unitary(&d));
    }

    #[test]
    fn fiber_subgroup() {
        let m = 5;
        let gens = vec![GroupElement::circle_pair(PI / m as f64, Quaternion::ONE)];
        let g = FiniteGroup::from_generators(GroupSpec::ProdTetrahedral { m }, gens, 100).unwrap();
        assert_eq!(g.order(), 10);
        assert!(g.elements.iter().all(|x| x.mobius().is_identity()));
    }

    #[test]
    fn gamma_prime_orders() {
        assert_eq!(gamma_prime(&GroupSpec::ProdIcosahedral { m: 7 }).unwrap().order(), 120);
        assert_eq!(gamma_prime(&GroupSpec::ProdDihedral { m: 5, n: 3 }).unwrap().order(), 12);
        assert_eq!(gamma_prime(&GroupSpec::Index3Diagonal { m: 9 }).unwrap().order(), 216);
        assert_eq!(gamma_prime(&GroupSpec::Index2Diagonal { m: 4, n: 5 }).unwrap().order(), 80);
    }
}
