use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::catalog::GroupSpec;
use crate::error::Result;
use crate::resolution::resolution_graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopologyReport {
    pub k_gamma: i64,
    pub tau_top: i64,
    pub chi_top: i64,
    #[serde(with = "crate::rational")]
    pub chi_orb: Ratio<i64>,
    pub b2_minus: i64,
    #[serde(with = "crate::rational::option")]
    pub eta: Option<Ratio<i64>>,
    /// `2 − 2/|Γ| − 3η`, when η is supplied.
    #[serde(with = "crate::rational::option")]
    pub sfasd_bound: Option<Ratio<i64>>,
    pub bound_holds: Option<bool>,
    /// `b₂⁻` minus the bound.
    #[serde(with = "crate::rational::option")]
    pub bound_excess: Option<Ratio<i64>>,
    /// The η for which the bound is an equality.
    #[serde(with = "crate::rational")]
    pub implied_eta: Ratio<i64>,
}

pub fn topology_report(spec: &GroupSpec, eta: Option<Ratio<i64>>) -> Result<TopologyReport> {
    let k = resolution_graph(spec)?.k_gamma;
    Ok(topology_from(k, spec.expected_order(), eta))
}

/// The report for a resolution with `k` curves and a group of order `order`.
pub fn topology_from(k: i64, order: i64, eta: Option<Ratio<i64>>) -> TopologyReport {
    let two = Ratio::from_integer(2);
    let inv = Ratio::new(2, order);
    let bound = eta.map(|e| two - inv - e * 3);
    let b2 = Ratio::from_integer(k);
    TopologyReport {
        k_gamma: k,
        tau_top: -k,
        chi_top: 1 + k,
        chi_orb: Ratio::from_integer(1 + k) - Ratio::new(1, order),
        b2_minus: k,
        eta,
        sfasd_bound: bound,
        bound_holds: bound.map(|b| b2 >= b),
        bound_excess: bound.map(|b| b2 - b),
        implied_eta: (two - inv - b2) / 3,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn implied_eta_examples() {
        let q8 = topology_report(&GroupSpec::ProdDihedral { m: 1, n: 2 }, None).unwrap();
        assert_eq!(q8.implied_eta, Ratio::new(-3, 4));
        assert_eq!(q8.chi_top, 5);
        assert_eq!(q8.tau_top, -4);
        let t = topology_report(&GroupSpec::ProdTetrahedral { m: 1 }, None).unwrap();
        assert_eq!(t.implied_eta, (Ratio::from_integer(2) - Ratio::new(1, 12) - 6) / 3);
    }

    #[test]
    fn bound_with_eta() {
        let r = topology_from(4, 8, Some(Ratio::new(-3, 4)));
        assert_eq!(r.sfasd_bound, Some(Ratio::from_integer(4)));
        assert_eq!(r.bound_holds, Some(true));
        assert_eq!(r.bound_excess, Some(Ratio::from_integer(0)));
    }
}
