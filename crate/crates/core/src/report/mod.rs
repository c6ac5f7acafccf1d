//! Per-spec reports, sweep verification and export.

mod config;
mod dot;
mod sweep;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

pub use config::{eta_lines, parse_families, parse_key_values, parse_tolerance, SweepConfig};
pub use dot::{export_dot, write_dot, GraphKind};
pub use sweep::{file_stem, reference_histogram, verify, CategoryCount, VerifySummary};

use crate::catalog::{
    cyclic_type_of, enumerate, is_cyclic, is_fixed_point_free, CyclicType, FiniteGroup, GroupSpec,
};
use crate::error::Result;
use crate::hj::HjString;
use crate::invariants::{dim_h1_theta, dim_sfk, topology_from, DeformationReport, TopologyReport};
use crate::lattice::Inertia;
use crate::quaternion::{GroupElement, Quaternion};
use crate::resolution::{
    b_gamma, compactification_of, cyclic_equivalent_type, resolution_graph, singularity_triple_of, Agreement,
    PlumbingGraph, SingularityTriple,
};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, pass: bool, detail: impl Into<String>) -> Check {
        Check {
            name: name.to_string(),
            pass,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResolutionSection {
    pub graph: PlumbingGraph,
    pub strings: Vec<HjString>,
    /// Lengths `kᵢ` of the strings.
    pub lengths: Vec<usize>,
    pub negative_definite: bool,
    /// Lens type when the group is cyclic.
    pub cyclic_equivalent: Option<CyclicType>,
    #[serde(with = "crate::rational::option")]
    pub seifert_euler: Option<Ratio<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompactificationSection {
    pub b_prime: i64,
    pub kappa: i64,
    pub dual_strings: Vec<HjString>,
    /// Lengths `ℓᵢ` of the dual strings.
    pub lengths: Vec<usize>,
    pub graph: PlumbingGraph,
    pub curve_count: usize,
    pub total_inertia: Inertia,
    pub total_determinant: i64,
    pub window: (i64, i64),
    pub lattice_candidates: Vec<i64>,
    pub seifert_candidates: Vec<i64>,
}

impl CompactificationSection {
    /// Resolution star followed by the compactification star.
    pub fn configuration(&self, resolution: &PlumbingGraph) -> Vec<PlumbingGraph> {
        vec![resolution.clone(), self.graph.clone()]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub spec: GroupSpec,
    pub order: i64,
    pub singularities: Option<SingularityTriple>,
    pub b_gamma: Option<i64>,
    #[serde(with = "crate::rational::option")]
    pub b_gamma_rational: Option<Ratio<i64>>,
    pub k_gamma: i64,
    pub signature: i64,
    pub resolution: ResolutionSection,
    pub compactification: Option<CompactificationSection>,
    pub deformations: Option<DeformationReport>,
    pub moduli_dim: Option<i64>,
    pub h1_theta: i64,
    pub topology: TopologyReport,
    pub checks: Vec<Check>,
}

impl InvariantReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<InvariantReport> {
        serde_json::from_str(s).map_err(|e| crate::Error::Report(format!("report JSON: {e}")))
    }

    /// Short human-readable summary.
    pub fn to_text(&self) -> String {
        let mut out = format!("spec            {}\norder           {}\n", self.spec, self.order);
        if let Some(t) = &self.singularities {
            let list: Vec<String> = t.from_table.iter().map(|c| c.to_string()).collect();
            out += &format!("singularities   {}\n", list.join(" "));
        }
        if let Some(c) = &self.resolution.cyclic_equivalent {
            out += &format!("cyclic type     {c}\n");
        }
        if let Some(b) = self.b_gamma {
            out += &format!("b_gamma         {b}\n");
        }
        out += &format!(
            "k_gamma         {}\nsignature       {}\nresolution      {:?} arms {:?}\nh1_theta        {}\n",
            self.k_gamma, self.signature, self.resolution.graph.center, self.resolution.graph.arms, self.h1_theta
        );
        if let Some(c) = &self.compactification {
            out += &format!(
                "compactified    b' {} kappa {} arms {:?}\n",
                c.b_prime, c.kappa, c.graph.arms
            );
        }
        if let Some(d) = &self.deformations {
            out += &format!(
                "deformations    brute {} closed {} 2b-2 {}{}\n",
                d.brute,
                d.closed,
                d.two_b_minus_2,
                if d.applicable { "" } else { " (m = 1)" }
            );
        }
        if let Some(md) = self.moduli_dim {
            out += &format!("moduli_dim      {md}\n");
        }
        out += &format!("implied eta     {}\n", self.topology.implied_eta);
        let failed = self.failures().count();
        out += &format!("checks          {} passed, {} failed\n", self.checks.len() - failed, failed);
        for c in self.failures() {
            out += &format!("  FAIL {}: {}\n", c.name, c.detail);
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DescribeOptions {
    pub tolerance: f64,
    pub eta: Option<Ratio<i64>>,
}

impl Default for DescribeOptions {
    fn default() -> Self {
        DescribeOptions {
            tolerance: 1e-6,
            eta: None,
        }
    }
}

fn fiber_check(spec: &GroupSpec, group: &FiniteGroup, m: i64) -> Check {
    let g = GroupElement::circle_pair(std::f64::consts::PI / m as f64, Quaternion::ONE);
    let sub = FiniteGroup::from_generators(*spec, vec![g], 4 * m as usize);
    let pass = match &sub {
        Ok(s) => {
            s.order() as i64 == 2 * m
                && s.elements.iter().all(|x| x.mobius().is_identity() && group.contains(x))
        }
        Err(_) => false,
    };
    Check::new(
        "fiber_subgroup",
        pass,
        format!("order {} (expected {})", sub.map(|s| s.order()).unwrap_or(0), 2 * m),
    )
}

/// Runs every applicable computation for one spec.
pub fn describe(spec: &GroupSpec, options: &DescribeOptions) -> Result<InvariantReport> {
    let tol = options.tolerance;
    let group = enumerate(spec)?;
    let order = group.order() as i64;
    let mut checks = vec![
        Check::new("order", order == spec.expected_order(), format!("{order}")),
        Check::new("fixed_point_free", is_fixed_point_free(&group)?, ""),
    ];
    let cyclic = is_cyclic(&group)?;
    let resolution = resolution_graph(spec)?;

    if spec.is_cyclic_like() {
        checks.push(Check::new("cyclic", cyclic, ""));
        let ty = cyclic_equivalent_type(spec)?;
        let recovered = cyclic_type_of(&group)?;
        checks.push(Check::new(
            "cyclic_type",
            recovered.conjugate_equivalent(&ty),
            format!("recovered {recovered}, expected {ty}"),
        ));
        checks.push(Check::new(
            "negative_definite",
            resolution.negative_definite && resolution.signature == -resolution.k_gamma,
            format!("tau {}", resolution.signature),
        ));
        let topology = topology_from(resolution.k_gamma, order, options.eta);
        if let Some(c) = lemma_check(spec, &group, &topology) {
            checks.push(c);
        }
        return Ok(InvariantReport {
            spec: *spec,
            order,
            singularities: None,
            b_gamma: None,
            b_gamma_rational: None,
            k_gamma: resolution.k_gamma,
            signature: resolution.signature,
            h1_theta: dim_h1_theta(&resolution.graph),
            resolution: ResolutionSection {
                lengths: resolution.strings.iter().map(HjString::len).collect(),
                graph: resolution.graph,
                strings: resolution.strings,
                negative_definite: resolution.negative_definite,
                cyclic_equivalent: Some(ty),
                seifert_euler: None,
            },
            compactification: None,
            deformations: None,
            moduli_dim: None,
            topology,
            checks,
        });
    }

    let m = spec.m().expect("non-cyclic");
    let h = spec.image_order().expect("non-cyclic");
    checks.push(Check::new("non_cyclic", !cyclic, ""));
    checks.push(fiber_check(spec, &group, m));

    let triple = singularity_triple_of(spec, &group, tol)?;
    checks.push(Check::new(
        "singularity_table",
        true,
        match triple.agreement {
            Agreement::Exact => "exact".to_string(),
            Agreement::ConjugateEquivalent => "conjugate-equivalent".to_string(),
        },
    ));
    let b = b_gamma(spec)?;
    checks.push(Check::new("b_gamma", b.value >= 2, format!("{} = {}", b.value, b.rational)));
    checks.push(Check::new(
        "negative_definite",
        resolution.negative_definite && resolution.signature == -resolution.k_gamma,
        format!("tau {}", resolution.signature),
    ));
    let e = resolution.graph.seifert_euler()?;
    let target = Ratio::new(-2 * m, h);
    checks.push(Check::new("seifert_euler", e == target, format!("{e} (expected {target})")));

    let comp = compactification_of(spec, &resolution)?;
    let want = Inertia {
        positive: 1,
        negative: comp.kappa as usize,
        zero: 0,
    };
    checks.push(Check::new(
        "b_prime",
        comp.b_prime.total_inertia == want && comp.curve_count as i64 == comp.kappa + 1,
        format!("b' = {} (b_gamma - 3 = {})", comp.b_prime.value, b.value - 3),
    ));

    let deformations = dim_sfk(spec, tol)?;
    checks.push(Check::new(
        "deformation_dimension",
        deformations.agreement,
        format!(
            "brute {} closed {} 2b-2 {} residual {:e}",
            deformations.brute, deformations.closed, deformations.two_b_minus_2, deformations.residual
        ),
    ));

    let topology = topology_from(resolution.k_gamma, order, options.eta);
    if let Some(c) = lemma_check(spec, &group, &topology) {
        checks.push(c);
    }

    Ok(InvariantReport {
        spec: *spec,
        order,
        singularities: Some(triple),
        b_gamma: Some(b.value),
        b_gamma_rational: Some(b.rational),
        k_gamma: resolution.k_gamma,
        signature: resolution.signature,
        h1_theta: dim_h1_theta(&resolution.graph),
        moduli_dim: Some(2 * (b.value - 1) + resolution.k_gamma),
        resolution: ResolutionSection {
            lengths: resolution.strings.iter().map(HjString::len).collect(),
            graph: resolution.graph,
            strings: resolution.strings,
            negative_definite: resolution.negative_definite,
            cyclic_equivalent: None,
            seifert_euler: Some(e),
        },
        compactification: Some(CompactificationSection {
            b_prime: comp.b_prime.value,
            kappa: comp.kappa,
            lengths: comp.dual_strings.iter().map(HjString::len).collect(),
            dual_strings: comp.dual_strings,
            graph: comp.graph,
            curve_count: comp.curve_count,
            total_inertia: comp.b_prime.total_inertia,
            total_determinant: comp.b_prime.total_determinant,
            window: comp.b_prime.window,
            lattice_candidates: comp.b_prime.lattice_candidates,
            seifert_candidates: comp.b_prime.seifert_candidates,
        }),
        deformations: Some(deformations),
        topology,
        checks,
    })
}

/// With η supplied: equality in the curvature bound for groups in SU(2),
/// strict inequality otherwise.
fn lemma_check(spec: &GroupSpec, group: &FiniteGroup, topology: &TopologyReport) -> Option<Check> {
    let excess = topology.bound_excess?;
    let su2 = crate::catalog::is_special_unitary(group);
    let zero = Ratio::from_integer(0);
    let pass = if su2 { excess == zero } else { excess > zero };
    Some(Check::new(
        "eta_bound",
        pass,
        format!(
            "{spec}: b2- - bound = {excess} ({})",
            if su2 { "expect equality" } else { "expect strict" }
        ),
    ))
}
