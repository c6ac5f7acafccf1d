use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::plumbing::{Configuration, PlumbingGraph};
use super::singularities::{b_gamma, table_triple};
use super::ResolutionError;
use crate::catalog::{canonical_cyclic, cyclic_type_of, enumerate, CyclicType, GroupSpec};
use crate::error::Result;
use crate::hj::{dual_type, hj_string, HjString};
use crate::lattice::{self, Inertia};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Resolution {
    pub graph: PlumbingGraph,
    pub strings: Vec<HjString>,
    pub k_gamma: i64,
    pub signature: i64,
    pub negative_definite: bool,
    /// True when the graph is a single chain.
    pub cyclic: bool,
}

/// Lens type of a spec whose group is cyclic.
pub fn cyclic_equivalent_type(spec: &GroupSpec) -> Result<CyclicType> {
    spec.validate()?;
    match *spec {
        GroupSpec::Cyclic { q, p } => Ok(canonical_cyclic(q, p)?),
        _ if spec.is_degenerate() => Ok(cyclic_type_of(&enumerate(spec)?)?),
        _ => Err(ResolutionError::NotApplicable(format!("{spec} is not cyclic")).into()),
    }
}

fn finish(graph: PlumbingGraph, strings: Vec<HjString>, cyclic: bool) -> Resolution {
    let inertia = graph.inertia();
    Resolution {
        k_gamma: graph.vertex_count() as i64,
        signature: inertia.signature(),
        negative_definite: graph.is_negative_definite(),
        graph,
        strings,
        cyclic,
    }
}

fn negated(s: &HjString) -> Vec<i64> {
    s.entries.iter().map(|e| -e).collect()
}

/// Star with center `−b_Γ` and one arm per singular point, the first
/// entry of each string next to the center. Cyclic specs give a chain.
pub fn resolution_graph(spec: &GroupSpec) -> Result<Resolution> {
    if spec.is_cyclic_like() {
        let t = cyclic_equivalent_type(spec)?;
        let s = hj_string(t)?;
        let graph = PlumbingGraph::chain(&negated(&s))?;
        return Ok(finish(graph, vec![s], true));
    }
    let b = b_gamma(spec)?.value;
    let strings = table_triple(spec)?
        .into_iter()
        .map(hj_string)
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let graph = PlumbingGraph::new(-b, strings.iter().map(negated).collect())?;
    Ok(finish(graph, strings, false))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BPrimeReport {
    pub value: i64,
    /// Inclusive scan window.
    pub window: (i64, i64),
    /// Values passing the signature and square-determinant tests alone.
    pub lattice_candidates: Vec<i64>,
    /// Values whose compactification star has the required Euler number.
    pub seifert_candidates: Vec<i64>,
    pub total_inertia: Inertia,
    pub total_determinant: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Compactification {
    pub graph: PlumbingGraph,
    pub b_prime: BPrimeReport,
    pub kappa: i64,
    pub dual_types: Vec<CyclicType>,
    pub dual_strings: Vec<HjString>,
    pub curve_count: usize,
    /// Resolution star and compactification star together.
    pub configuration: Configuration,
}

fn euler_target(spec: &GroupSpec) -> Ratio<i64> {
    let m = spec.m().expect("non-cyclic");
    Ratio::new(2 * m, spec.image_order().expect("non-cyclic"))
}

/// Scans candidate central weights for the compactification star.
///
/// The full configuration is the resolution star together with the
/// compactification star (the two do not meet). A candidate must give the
/// configuration signature `(1, 𝔨)`, a perfect-square determinant, and a
/// compactification star with Euler number `+2m/h`.
pub fn solve_b_prime(spec: &GroupSpec, resolution: &Resolution) -> Result<BPrimeReport> {
    if resolution.cyclic {
        return Err(ResolutionError::NotApplicable(format!("{spec} is cyclic")).into());
    }
    let b = -resolution.graph.center;
    let duals: Vec<Vec<i64>> = resolution
        .strings
        .iter()
        .map(|s| hj_string(dual_type(s.source)).map(|d| negated(&d)))
        .collect::<std::result::Result<_, _>>()?;
    let star = PlumbingGraph::new(0, duals)?;
    let kappa = resolution.k_gamma + star.vertex_count() as i64 - 1;
    let res_inertia = resolution.graph.inertia();
    let res_det = resolution.graph.determinant();
    let elim = star
        .star_elimination()
        .ok_or_else(|| ResolutionError::CrossCheckFailure(format!("{spec}: dual arm pivot vanished")))?;
    let target = euler_target(spec);
    let want = Inertia {
        positive: 1,
        negative: kappa as usize,
        zero: 0,
    };

    let window = (-10 * b, 10 * b);
    let mut lattice_candidates = Vec::new();
    let mut seifert_candidates = Vec::new();
    let mut chosen = Vec::new();
    for c in window.0..=window.1 {
        let (inertia, det) = elim
            .evaluate(c)
            .ok_or_else(|| ResolutionError::CrossCheckFailure(format!("{spec}: non-integral determinant")))?;
        let total_det = &res_det * BigInt::from(det);
        let lattice_ok = res_inertia.add(&inertia) == want && lattice::is_perfect_square(&total_det.abs());
        let seifert_ok = star.with_center(c).seifert_euler()? == target;
        if lattice_ok {
            lattice_candidates.push(c);
        }
        if seifert_ok {
            seifert_candidates.push(c);
        }
        if lattice_ok && seifert_ok {
            chosen.push((c, res_inertia.add(&inertia), total_det));
        }
    }
    match chosen.len() {
        0 => Err(ResolutionError::NoCandidate {
            spec: spec.to_string(),
            lattice_candidates,
            seifert_candidates,
        }
        .into()),
        1 => {
            let (value, total_inertia, det) = chosen.pop().unwrap();
            let total_determinant = i64::try_from(det)
                .map_err(|_| ResolutionError::Overflow(format!("{spec}: configuration determinant")))?;
            Ok(BPrimeReport {
                value,
                window,
                lattice_candidates,
                seifert_candidates,
                total_inertia,
                total_determinant,
            })
        }
        _ => Err(ResolutionError::AmbiguousCandidate {
            spec: spec.to_string(),
            candidates: chosen.into_iter().map(|c| c.0).collect(),
        }
        .into()),
    }
}

pub fn compactification(spec: &GroupSpec) -> Result<Compactification> {
    compactification_of(spec, &resolution_graph(spec)?)
}

pub fn compactification_of(spec: &GroupSpec, resolution: &Resolution) -> Result<Compactification> {
    let b_prime = solve_b_prime(spec, resolution)?;
    let dual_types: Vec<CyclicType> = resolution.strings.iter().map(|s| dual_type(s.source)).collect();
    let dual_strings = dual_types
        .iter()
        .map(|&t| hj_string(t))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let graph = PlumbingGraph::new(b_prime.value, dual_strings.iter().map(negated).collect())?;
    let kappa = 1
        + resolution.strings.iter().map(|s| s.len() as i64).sum::<i64>()
        + dual_strings.iter().map(|s| s.len() as i64).sum::<i64>();
    let configuration = Configuration {
        components: vec![resolution.graph.clone(), graph.clone()],
    };
    let curve_count = configuration.vertex_count();
    if curve_count as i64 != kappa + 1 {
        return Err(ResolutionError::CrossCheckFailure(format!(
            "{spec}: {curve_count} curves for kappa = {kappa}"
        ))
        .into());
    }
    Ok(Compactification {
        graph,
        b_prime,
        kappa,
        dual_types,
        dual_strings,
        curve_count,
        configuration,
    })
}
