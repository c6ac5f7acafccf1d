use std::f64::consts::TAU;

use log::debug;
use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::ResolutionError;
use crate::catalog::{canonical_cyclic, enumerate, mod_inverse, CyclicType, ElementIndex, FiniteGroup, GroupSpec};
use crate::error::Result;
use crate::quaternion::{GroupElement, Quaternion, RiemannPoint, EQ_TOL};

/// Chordal distance below which two fixed points are considered equal.
const POINT_TOL: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Agreement {
    /// Equal after plain normalization modulo β.
    Exact,
    /// Equal only after identifying `L(q, p)` with `L(q⁻¹, p)`.
    ConjugateEquivalent,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularityTriple {
    pub from_table: Vec<CyclicType>,
    pub from_computation: Vec<CyclicType>,
    pub agreement: Agreement,
}

impl SingularityTriple {
    /// The normalized table triple, which downstream constructions use.
    pub fn types(&self) -> &[CyclicType] {
        &self.from_table
    }
}

fn sorted(mut v: Vec<CyclicType>) -> Vec<CyclicType> {
    v.sort_by_key(|t| (t.beta, t.alpha));
    v
}

fn non_cyclic(spec: &GroupSpec) -> Result<i64> {
    spec.validate()?;
    match spec.m() {
        Some(m) if !spec.is_degenerate() => Ok(m),
        _ => Err(ResolutionError::NotApplicable(format!("{spec} is cyclic")).into()),
    }
}

/// The three orbifold types listed for each family, normalized modulo β.
pub fn table_triple(spec: &GroupSpec) -> Result<Vec<CyclicType>> {
    let m = non_cyclic(spec)?;
    let raw: [(i64, i64); 3] = match *spec {
        GroupSpec::ProdDihedral { n, .. } | GroupSpec::Index2Diagonal { n, .. } => [(1, 2), (1, 2), (-m, n)],
        GroupSpec::ProdTetrahedral { .. } => [(1, 2), (-m, 3), (-m, 3)],
        GroupSpec::ProdOctahedral { .. } => [(1, 2), (-m, 3), (-m, 4)],
        GroupSpec::ProdIcosahedral { .. } => [(1, 2), (-m, 3), (-m, 5)],
        GroupSpec::Index3Diagonal { .. } => [(1, 2), (1, 3), (2, 3)],
        GroupSpec::Cyclic { .. } => unreachable!(),
    };
    let types = raw
        .iter()
        .map(|&(a, b)| canonical_cyclic(a, b))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(sorted(types))
}

/// `β` up to sign, as a key into an [`ElementIndex`].
fn right_class(g: &GroupElement) -> GroupElement {
    let r = g.right;
    let lead = r.coords().into_iter().find(|x| x.abs() > EQ_TOL).unwrap_or(0.0);
    GroupElement {
        left: Quaternion::ONE,
        right: if lead < 0.0 { -r } else { r },
    }
}

/// Representatives of the cosets of the fiber subgroup `⟨[e^{πi/m}, 1]⟩`,
/// i.e. of the image of the group in PSU(2). The identity coset is first.
pub fn effective_cosets(group: &FiniteGroup) -> Vec<GroupElement> {
    let mut index = ElementIndex::default();
    let mut reps = Vec::new();
    for g in &group.elements {
        let key = right_class(g);
        if index.get(&key).is_none() {
            index.insert(&key, reps.len());
            reps.push(*g);
        }
    }
    reps
}

fn find_point(points: &[RiemannPoint], w: &RiemannPoint) -> Option<usize> {
    points.iter().position(|p| p.approx_eq(w, POINT_TOL))
}

fn snap(x: f64, what: &str, tol: f64) -> Result<i64> {
    let r = x.round();
    let residual = (x - r).abs();
    if residual > tol {
        return Err(ResolutionError::SnapFailure {
            what: what.to_string(),
            residual,
            tol,
        }
        .into());
    }
    Ok(r as i64)
}

/// Orbifold type at a fixed point `w0` of `g`, as `(t, u)` over `order`:
/// `μ₁/μ₂ = e^{2πit/𝔭}` and `μ₂^{2m} = e^{2πiu/𝔭}`, where `μ₂` is the
/// eigenvalue on the line over `w0`.
fn rotation_exponents(g: &GroupElement, w0: &RiemannPoint, order: i64, m: i64, tol: f64) -> Result<(i64, i64)> {
    let mat = g.to_matrix()?;
    let mu2 = match w0 {
        RiemannPoint::Infinity => mat.m[0][0],
        RiemannPoint::Finite(w) => mat.m[1][0] * w + mat.m[1][1],
    };
    let mu1 = mat.det() / mu2;
    let p = order as f64;
    let t = snap((mu1 / mu2).arg() / TAU * p, "tangent rotation", tol)?;
    let u = snap(mu2.arg() * (2 * m) as f64 / TAU * p, "normal rotation", tol)?;
    Ok((t.rem_euclid(order), u.rem_euclid(order)))
}

/// Computes the singular points of the quotient from fixed points of the
/// PSU(2) image, with their cyclic orbifold types.
pub fn computed_triple(spec: &GroupSpec, group: &FiniteGroup, tol: f64) -> Result<Vec<CyclicType>> {
    let m = non_cyclic(spec)?;
    let cosets = effective_cosets(group);
    let h = cosets.len() as i64;
    let expected_h = spec.image_order().expect("non-cyclic");
    if h != expected_h || h * 2 * m != group.order() as i64 {
        return Err(ResolutionError::CrossCheckFailure(format!(
            "{spec}: image has {h} elements, expected {expected_h}"
        ))
        .into());
    }
    let maps: Vec<_> = cosets.iter().map(|g| g.mobius()).collect();

    let mut points: Vec<RiemannPoint> = Vec::new();
    for f in maps.iter().filter(|f| !f.is_identity()) {
        for w in f.fixed_points() {
            if find_point(&points, &w).is_none() {
                points.push(w);
            }
        }
    }

    let mut orbit_of = vec![usize::MAX; points.len()];
    let mut orbits: Vec<(usize, usize)> = Vec::new(); // (representative, size)
    for i in 0..points.len() {
        if orbit_of[i] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut size = 0;
        for f in &maps {
            let image = f.apply(points[i]);
            let j = find_point(&points, &image).ok_or_else(|| {
                ResolutionError::CrossCheckFailure(format!("{spec}: fixed-point set not invariant"))
            })?;
            if orbit_of[j] == usize::MAX {
                orbit_of[j] = id;
                size += 1;
            }
        }
        orbits.push((i, size));
    }
    if orbits.len() != 3 {
        return Err(ResolutionError::OrbitCountMismatch {
            spec: spec.to_string(),
            found: orbits.len(),
        }
        .into());
    }

    let mut types = Vec::with_capacity(3);
    for &(rep, size) in &orbits {
        let w0 = points[rep];
        let stabilizer: Vec<&GroupElement> = cosets
            .iter()
            .zip(&maps)
            .filter(|(_, f)| f.apply(w0).approx_eq(&w0, POINT_TOL))
            .map(|(g, _)| g)
            .collect();
        let order = stabilizer.len() as i64;
        if order * size as i64 != h {
            return Err(ResolutionError::CrossCheckFailure(format!(
                "{spec}: stabilizer of order {order} on an orbit of {size} points in a group of order {h}"
            ))
            .into());
        }
        let mut found: Option<CyclicType> = None;
        for g in stabilizer {
            let (t, u) = rotation_exponents(g, &w0, order, m, tol)?;
            if t.gcd(&order) != 1 {
                continue;
            }
            let inv = mod_inverse(t, order).expect("coprime");
            let ty = canonical_cyclic(u * inv, order)?;
            match found {
                None => found = Some(ty),
                Some(prev) if prev != ty => {
                    return Err(ResolutionError::CrossCheckFailure(format!(
                        "{spec}: stabilizer generators disagree at {w0}: {prev} vs {ty}"
                    ))
                    .into())
                }
                _ => {}
            }
        }
        let ty = found.ok_or_else(|| {
            ResolutionError::CrossCheckFailure(format!("{spec}: stabilizer at {w0} has no generator"))
        })?;
        types.push(ty);
    }
    Ok(sorted(types))
}

/// Table lookup and fixed-point computation, required to agree.
pub fn singularity_triple(spec: &GroupSpec, tol: f64) -> Result<SingularityTriple> {
    let group = enumerate(spec)?;
    singularity_triple_of(spec, &group, tol)
}

pub fn singularity_triple_of(spec: &GroupSpec, group: &FiniteGroup, tol: f64) -> Result<SingularityTriple> {
    let table = table_triple(spec)?;
    let computed = computed_triple(spec, group, tol)?;
    let agreement = if table == computed {
        Agreement::Exact
    } else {
        let conj = |v: &[CyclicType]| sorted(v.iter().map(CyclicType::conjugate_canonical).collect());
        if conj(&table) == conj(&computed) {
            debug!("{spec}: singularity triple matched up to conjugation");
            Agreement::ConjugateEquivalent
        } else {
            return Err(ResolutionError::TableDisagreement {
                spec: spec.to_string(),
                table,
                computed,
            }
            .into());
        }
    };
    Ok(SingularityTriple {
        from_table: table,
        from_computation: computed,
        agreement,
    })
}

/// Both derivations of the central self-intersection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BGamma {
    pub value: i64,
    #[serde(with = "crate::rational")]
    pub rational: Ratio<i64>,
}

/// `2 + (4m/|Γ|)·(m − m mod (|Γ|/4m))`.
pub fn b_gamma_integer(spec: &GroupSpec) -> Result<i64> {
    let m = non_cyclic(spec)?;
    let order = spec.expected_order();
    let k = order / (4 * m);
    Ok(2 + (m - m % k) / k)
}

/// `Σ αᵢ/βᵢ + 2m/h` over a triple.
pub fn b_gamma_rational(spec: &GroupSpec, triple: &[CyclicType]) -> Result<Ratio<i64>> {
    let m = non_cyclic(spec)?;
    let h = spec.image_order().expect("non-cyclic");
    Ok(triple.iter().map(CyclicType::ratio).sum::<Ratio<i64>>() + Ratio::new(2 * m, h))
}

pub fn b_gamma(spec: &GroupSpec) -> Result<BGamma> {
    let value = b_gamma_integer(spec)?;
    let rational = b_gamma_rational(spec, &table_triple(spec)?)?;
    if rational != Ratio::from_integer(value) || value < 2 {
        return Err(ResolutionError::CrossCheckFailure(format!(
            "{spec}: b_gamma integer {value} vs rational {rational}"
        ))
        .into());
    }
    Ok(BGamma { value, rational })
}
