use std::collections::BTreeMap;
use std::path::Path;

use log::{info, warn};
use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{describe, Check, DescribeOptions, SweepConfig};
use crate::catalog::{enumerate, eigenvalue_histogram, mod_inverse, specs_in_range, CyclicType, EigenHistogram, Family, GroupSpec};
use crate::error::{Error, Result};
use crate::hj::{cf_value, hj_string};
use crate::invariants::eisenstein_check;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryCount {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub specs: usize,
    pub categories: BTreeMap<String, CategoryCount>,
    pub failures: Vec<String>,
    pub warnings: Vec<String>,
}

impl VerifySummary {
    pub fn total_checks(&self) -> usize {
        self.categories.values().map(|c| c.pass + c.fail).sum()
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// 0 when every check passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    fn record(&mut self, category: &str, pass: bool, detail: impl FnOnce() -> String) {
        let c = self.categories.entry(category.to_string()).or_default();
        if pass {
            c.pass += 1;
        } else {
            c.fail += 1;
            self.failures.push(format!("{category}: {}", detail()));
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("specs {}\n", self.specs);
        for (name, c) in &self.categories {
            out += &format!("{name:<24} pass {:>7}  fail {:>5}\n", c.pass, c.fail);
        }
        for w in &self.warnings {
            out += &format!("warning: {w}\n");
        }
        for f in self.failures.iter().take(50) {
            out += &format!("FAIL {f}\n");
        }
        if self.failures.len() > 50 {
            out += &format!("... {} more failures\n", self.failures.len() - 50);
        }
        out += if self.passed() { "RESULT pass\n" } else { "RESULT fail\n" };
        out
    }
}

fn r(a: i64, b: i64) -> Ratio<i64> {
    Ratio::new(a, b)
}

/// Eigenvalue counts of the binary polyhedral groups, angles in full turns.
pub fn reference_histogram(family: Family) -> Option<EigenHistogram> {
    let common = [((r(0, 1), r(0, 1)), 1), ((r(1, 2), r(1, 2)), 1)];
    let rest: Vec<((Ratio<i64>, Ratio<i64>), usize)> = match family {
        Family::Tetrahedral => vec![
            ((r(1, 4), r(3, 4)), 6),
            ((r(1, 6), r(5, 6)), 8),
            ((r(1, 3), r(2, 3)), 8),
        ],
        Family::Octahedral => vec![
            ((r(1, 4), r(3, 4)), 18),
            ((r(1, 6), r(5, 6)), 8),
            ((r(1, 3), r(2, 3)), 8),
            ((r(1, 8), r(7, 8)), 6),
            ((r(3, 8), r(5, 8)), 6),
        ],
        Family::Icosahedral => vec![
            ((r(1, 4), r(3, 4)), 30),
            ((r(1, 6), r(5, 6)), 20),
            ((r(1, 3), r(2, 3)), 20),
            ((r(1, 10), r(9, 10)), 12),
            ((r(1, 5), r(4, 5)), 12),
            ((r(3, 10), r(7, 10)), 12),
            ((r(2, 5), r(3, 5)), 12),
        ],
        _ => return None,
    };
    Some(common.into_iter().chain(rest).collect())
}

/// File-system friendly form of a spec, e.g. `dihedral_1_2`.
pub fn file_stem(spec: &GroupSpec) -> String {
    spec.to_string().replace([':', ','], "_")
}

fn report_path(dir: &Path, spec: &GroupSpec) -> std::path::PathBuf {
    dir.join(format!("{}.json", file_stem(spec)))
}

fn hj_checks(summary: &mut VerifySummary, hj_max: i64) {
    for p in 2..=hj_max {
        for q in 1..p {
            let Some(qi) = mod_inverse(q, p) else { continue };
            let t = CyclicType { alpha: q, beta: p };
            let s = match hj_string(t) {
                Ok(s) => s,
                Err(e) => {
                    summary.record("hj_round_trip", false, || format!("{t}: {e}"));
                    continue;
                }
            };
            summary.record("hj_round_trip", cf_value(&s.entries) == Some(r(q, p)), || {
                format!("{t}: {:?}", s.entries)
            });
            summary.record("hj_entries", s.entries.iter().all(|&e| e >= 2), || {
                format!("{t}: {:?}", s.entries)
            });
            let mut rev = s.entries.clone();
            rev.reverse();
            let dual = hj_string(CyclicType { alpha: qi, beta: p }).map(|d| d.entries);
            summary.record("hj_reversal", dual.as_ref() == Ok(&rev), || format!("{t}"));
        }
    }
}

fn eisenstein_checks(summary: &mut VerifySummary, max: i64, tol: f64) {
    let bad: Vec<String> = (2..=max)
        .into_par_iter()
        .flat_map_iter(|n| {
            (0..=2 * n).filter_map(move |k| {
                let res = eisenstein_check(n, k);
                (res >= tol).then(|| format!("n={n} k={k}: residual {res:e}"))
            })
        })
        .collect();
    let total: usize = (2..=max).map(|n| 2 * n as usize + 1).sum();
    let c = summary.categories.entry("eisenstein".into()).or_default();
    c.pass += total - bad.len();
    c.fail += bad.len();
    summary.failures.extend(bad.into_iter().map(|b| format!("eisenstein: {b}")));
}

/// Runs the full sweep described by `config`.
pub fn verify(config: &SweepConfig) -> Result<VerifySummary> {
    config.validate()?;
    let specs = specs_in_range(&config.families, config.m_max, config.n_max, config.p_max);
    let mut summary = VerifySummary {
        specs: specs.len(),
        ..Default::default()
    };
    if specs.is_empty() {
        let w = "no spec matches the configured filters".to_string();
        warn!("{w}");
        summary.warnings.push(w);
        return Ok(summary);
    }
    if let Some(dir) = &config.out_dir {
        std::fs::create_dir_all(dir).map_err(|e| Error::Report(format!("creating {}: {e}", dir.display())))?;
    }
    info!("verifying {} specs", specs.len());

    let results: Vec<(GroupSpec, Vec<Check>)> = specs
        .par_iter()
        .map(|spec| {
            let options = DescribeOptions {
                tolerance: config.tolerance,
                eta: config.eta.get(spec).copied(),
            };
            match describe(spec, &options) {
                Ok(report) => {
                    if let Some(dir) = &config.out_dir {
                        if let Err(e) = std::fs::write(report_path(dir, spec), report.to_json()) {
                            return (*spec, vec![Check::new("write_report", false, e.to_string())]);
                        }
                    }
                    (*spec, report.checks)
                }
                Err(e) => (
                    *spec,
                    vec![Check::new("describe", false, format!("{}: {e}", e.module()))],
                ),
            }
        })
        .collect();
    for (spec, checks) in results {
        for c in checks {
            summary.record(&c.name, c.pass, || format!("{spec}: {}", c.detail));
        }
    }

    for family in [Family::Tetrahedral, Family::Octahedral, Family::Icosahedral] {
        if !config.families.contains(&family) {
            continue;
        }
        let spec = GroupSpec::from_parts(family, Some(1), None, None, None)?;
        let got = enumerate(&spec).and_then(|g| eigenvalue_histogram(&g));
        let want = reference_histogram(family);
        summary.record("eigenvalue_histogram", got.as_ref().ok() == want.as_ref(), || {
            format!("{spec}: {got:?}")
        });
    }
    hj_checks(&mut summary, config.hj_max);
    eisenstein_checks(&mut summary, config.eisenstein_max, config.tolerance);
    info!("{} checks, {} failures", summary.total_checks(), summary.failures.len());
    Ok(summary)
}
