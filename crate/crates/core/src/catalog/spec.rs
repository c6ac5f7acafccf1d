use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::CatalogError;
use crate::quaternion::{GroupElement, Quaternion};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Cyclic,
    Dihedral,
    Tetrahedral,
    Octahedral,
    Icosahedral,
    Index2,
    Index3,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Cyclic,
        Family::Dihedral,
        Family::Tetrahedral,
        Family::Octahedral,
        Family::Icosahedral,
        Family::Index2,
        Family::Index3,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Family::Cyclic => "cyclic",
            Family::Dihedral => "dihedral",
            Family::Tetrahedral => "tetrahedral",
            Family::Octahedral => "octahedral",
            Family::Icosahedral => "icosahedral",
            Family::Index2 => "index2",
            Family::Index3 => "index3",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s.trim())
            .ok_or_else(|| CatalogError::Parse(format!("unknown family '{s}'")))
    }
}

/// One of the seven families of finite subgroups of U(2) acting freely on S³.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum GroupSpec {
    Cyclic { q: i64, p: i64 },
    #[serde(rename = "dihedral")]
    ProdDihedral { m: i64, n: i64 },
    #[serde(rename = "tetrahedral")]
    ProdTetrahedral { m: i64 },
    #[serde(rename = "octahedral")]
    ProdOctahedral { m: i64 },
    #[serde(rename = "icosahedral")]
    ProdIcosahedral { m: i64 },
    #[serde(rename = "index2")]
    Index2Diagonal { m: i64, n: i64 },
    #[serde(rename = "index3")]
    Index3Diagonal { m: i64 },
}

impl GroupSpec {
    pub fn family(&self) -> Family {
        match self {
            GroupSpec::Cyclic { .. } => Family::Cyclic,
            GroupSpec::ProdDihedral { .. } => Family::Dihedral,
            GroupSpec::ProdTetrahedral { .. } => Family::Tetrahedral,
            GroupSpec::ProdOctahedral { .. } => Family::Octahedral,
            GroupSpec::ProdIcosahedral { .. } => Family::Icosahedral,
            GroupSpec::Index2Diagonal { .. } => Family::Index2,
            GroupSpec::Index3Diagonal { .. } => Family::Index3,
        }
    }

    /// Builds a spec from a family and the loose parameter set used by the CLI.
    pub fn from_parts(
        family: Family,
        m: Option<i64>,
        n: Option<i64>,
        q: Option<i64>,
        p: Option<i64>,
    ) -> Result<GroupSpec, CatalogError> {
        let need = |v: Option<i64>, name: &str| {
            v.ok_or_else(|| CatalogError::Parse(format!("family {family} needs --{name}")))
        };
        let spec = match family {
            Family::Cyclic => GroupSpec::Cyclic {
                q: need(q, "q")?,
                p: need(p, "p")?,
            },
            Family::Dihedral => GroupSpec::ProdDihedral {
                m: need(m, "m")?,
                n: need(n, "n")?,
            },
            Family::Tetrahedral => GroupSpec::ProdTetrahedral { m: need(m, "m")? },
            Family::Octahedral => GroupSpec::ProdOctahedral { m: need(m, "m")? },
            Family::Icosahedral => GroupSpec::ProdIcosahedral { m: need(m, "m")? },
            Family::Index2 => GroupSpec::Index2Diagonal {
                m: need(m, "m")?,
                n: need(n, "n")?,
            },
            Family::Index3 => GroupSpec::Index3Diagonal { m: need(m, "m")? },
        };
        Ok(spec)
    }

    /// The fiber parameter `m`; `None` for cyclic specs.
    pub fn m(&self) -> Option<i64> {
        match *self {
            GroupSpec::Cyclic { .. } => None,
            GroupSpec::ProdDihedral { m, .. }
            | GroupSpec::ProdTetrahedral { m }
            | GroupSpec::ProdOctahedral { m }
            | GroupSpec::ProdIcosahedral { m }
            | GroupSpec::Index2Diagonal { m, .. }
            | GroupSpec::Index3Diagonal { m } => Some(m),
        }
    }

    pub fn n(&self) -> Option<i64> {
        match *self {
            GroupSpec::ProdDihedral { n, .. } | GroupSpec::Index2Diagonal { n, .. } => Some(n),
            _ => None,
        }
    }

    pub fn validate(&self) -> Result<(), CatalogError> {
        let ok = match *self {
            GroupSpec::Cyclic { q, p } => p >= 2 && q >= 1 && q.gcd(&p) == 1,
            GroupSpec::ProdDihedral { m, n } => m >= 1 && n >= 1 && m.gcd(&(2 * n)) == 1,
            GroupSpec::ProdTetrahedral { m } | GroupSpec::ProdOctahedral { m } => {
                m >= 1 && m.gcd(&6) == 1
            }
            GroupSpec::ProdIcosahedral { m } => m >= 1 && m.gcd(&30) == 1,
            GroupSpec::Index2Diagonal { m, n } => {
                m >= 2 && n >= 1 && m % 2 == 0 && m.gcd(&n) == 1
            }
            GroupSpec::Index3Diagonal { m } => m >= 3 && m.gcd(&6) == 3,
        };
        if ok {
            Ok(())
        } else {
            Err(CatalogError::InvalidParameters(*self))
        }
    }

    pub fn expected_order(&self) -> i64 {
        match *self {
            GroupSpec::Cyclic { p, .. } => p,
            GroupSpec::ProdDihedral { m, n } | GroupSpec::Index2Diagonal { m, n } => 4 * m * n,
            GroupSpec::ProdTetrahedral { m } | GroupSpec::Index3Diagonal { m } => 24 * m,
            GroupSpec::ProdOctahedral { m } => 48 * m,
            GroupSpec::ProdIcosahedral { m } => 120 * m,
        }
    }

    /// Dihedral-type specs with `n = 1` generate cyclic groups.
    pub fn is_degenerate(&self) -> bool {
        self.n() == Some(1)
    }

    /// True for the cyclic family and for the degenerate `n = 1` specs.
    pub fn is_cyclic_like(&self) -> bool {
        matches!(self, GroupSpec::Cyclic { .. }) || self.is_degenerate()
    }

    /// Order `h` of the image of the group in PSU(2).
    pub fn image_order(&self) -> Option<i64> {
        match *self {
            GroupSpec::Cyclic { .. } => None,
            GroupSpec::ProdDihedral { n, .. } | GroupSpec::Index2Diagonal { n, .. } => Some(2 * n),
            GroupSpec::ProdTetrahedral { .. } | GroupSpec::Index3Diagonal { .. } => Some(12),
            GroupSpec::ProdOctahedral { .. } => Some(24),
            GroupSpec::ProdIcosahedral { .. } => Some(60),
        }
    }

    /// The multiplier `k` in the cyclic generator, with `2k ≡ q + 1 (mod p)`.
    pub fn cyclic_k(q: i64, p: i64) -> i64 {
        if p % 2 == 1 {
            ((q + 1) * (p + 1) / 2).rem_euclid(p)
        } else {
            ((q + 1) / 2).rem_euclid(p)
        }
    }

    pub fn generators(&self) -> Result<Vec<GroupElement>, CatalogError> {
        self.validate()?;
        let one = Quaternion::ONE;
        let pair = |theta: f64, right: Quaternion| GroupElement::circle_pair(theta, right);
        let fiber = |m: i64| pair(PI / m as f64, one);
        let gens = match *self {
            GroupSpec::Cyclic { q, p } => {
                let k = GroupSpec::cyclic_k(q, p);
                let pf = p as f64;
                vec![GroupElement::new(
                    Quaternion::circle(2.0 * PI * k as f64 / pf),
                    Quaternion::circle(2.0 * PI * (1 - k) as f64 / pf),
                )
                .expect("unit pair")]
            }
            GroupSpec::ProdDihedral { m, n } => vec![
                fiber(m),
                pair(0.0, Quaternion::circle(PI / n as f64)),
                pair(0.0, Quaternion::J),
            ],
            GroupSpec::ProdTetrahedral { m } => vec![
                fiber(m),
                pair(0.0, Quaternion::new(0.5, 0.5, 0.5, -0.5)),
                pair(0.0, Quaternion::new(0.5, 0.5, 0.5, 0.5)),
            ],
            GroupSpec::ProdOctahedral { m } => vec![
                fiber(m),
                pair(0.0, Quaternion::circle(PI / 4.0)),
                pair(0.0, Quaternion::new(0.5, 0.5, 0.5, 0.5)),
            ],
            GroupSpec::ProdIcosahedral { m } => {
                let tau = (1.0 + 5f64.sqrt()) / 2.0;
                vec![
                    fiber(m),
                    pair(0.0, Quaternion::new(0.5, tau / 2.0, 0.0, -0.5 / tau)),
                    pair(0.0, Quaternion::new(tau / 2.0, 0.5, 0.5 / tau, 0.0)),
                ]
            }
            GroupSpec::Index2Diagonal { m, n } => vec![
                fiber(m),
                pair(0.0, Quaternion::circle(PI / n as f64)),
                pair(PI / (2 * m) as f64, Quaternion::J),
            ],
            GroupSpec::Index3Diagonal { m } => vec![
                fiber(m),
                pair(0.0, Quaternion::I),
                pair(0.0, Quaternion::J),
                pair(PI / (3 * m) as f64, Quaternion::new(-0.5, -0.5, -0.5, 0.5)),
            ],
        };
        Ok(gens)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupSpec::Cyclic { q, p } => write!(f, "cyclic:{q},{p}"),
            GroupSpec::ProdDihedral { m, n } => write!(f, "dihedral:{m},{n}"),
            GroupSpec::ProdTetrahedral { m } => write!(f, "tetrahedral:{m}"),
            GroupSpec::ProdOctahedral { m } => write!(f, "octahedral:{m}"),
            GroupSpec::ProdIcosahedral { m } => write!(f, "icosahedral:{m}"),
            GroupSpec::Index2Diagonal { m, n } => write!(f, "index2:{m},{n}"),
            GroupSpec::Index3Diagonal { m } => write!(f, "index3:{m}"),
        }
    }
}

/// Parses the textual form `family:a[,b]` produced by `Display`.
impl FromStr for GroupSpec {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (fam, rest) = s
            .split_once(':')
            .ok_or_else(|| CatalogError::Parse(format!("expected family:params, got '{s}'")))?;
        let family: Family = fam.parse()?;
        let nums = rest
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| CatalogError::Parse(format!("bad integer '{t}' in '{s}'")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let arity = match family {
            Family::Cyclic | Family::Dihedral | Family::Index2 => 2,
            _ => 1,
        };
        if nums.len() != arity {
            return Err(CatalogError::Parse(format!(
                "family {family} takes {arity} parameter(s), got '{s}'"
            )));
        }
        let spec = match family {
            Family::Cyclic => GroupSpec::Cyclic { q: nums[0], p: nums[1] },
            Family::Dihedral => GroupSpec::ProdDihedral { m: nums[0], n: nums[1] },
            Family::Index2 => GroupSpec::Index2Diagonal { m: nums[0], n: nums[1] },
            _ => GroupSpec::from_parts(family, Some(nums[0]), None, None, None)?,
        };
        Ok(spec)
    }
}

/// Every valid spec within the given bounds, in a deterministic order.
/// Cyclic specs use the representatives `1 ≤ q < p`.
pub fn specs_in_range(families: &[Family], m_max: i64, n_max: i64, p_max: i64) -> Vec<GroupSpec> {
    let mut out = Vec::new();
    for &fam in families {
        match fam {
            Family::Cyclic => {
                for p in 2..=p_max {
                    for q in 1..p {
                        out.push(GroupSpec::Cyclic { q, p });
                    }
                }
            }
            Family::Dihedral | Family::Index2 => {
                for m in 1..=m_max {
                    for n in 1..=n_max {
                        out.push(GroupSpec::from_parts(fam, Some(m), Some(n), None, None).unwrap());
                    }
                }
            }
            _ => {
                for m in 1..=m_max {
                    out.push(GroupSpec::from_parts(fam, Some(m), None, None, None).unwrap());
                }
            }
        }
    }
    out.retain(|s| s.validate().is_ok());
    out
}
