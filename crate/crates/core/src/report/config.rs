use std::collections::BTreeMap;
use std::path::PathBuf;

use num_rational::Ratio;

use crate::catalog::{Family, GroupSpec};
use crate::error::{Error, Result};
use crate::rational;

/// Flat `key = value` settings. Blank lines and `#` comments are ignored.
pub fn parse_key_values(text: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| Error::Report(format!("config line {}: expected key = value", no + 1)))?;
        out.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub families: Vec<Family>,
    pub m_max: i64,
    pub n_max: i64,
    pub p_max: i64,
    pub tolerance: f64,
    pub eta: BTreeMap<GroupSpec, Ratio<i64>>,
    pub out_dir: Option<PathBuf>,
    /// Largest `p` in the continued-fraction round trip.
    pub hj_max: i64,
    /// Largest `n` in the cotangent identity check.
    pub eisenstein_max: i64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            families: Family::ALL.to_vec(),
            m_max: 120,
            n_max: 24,
            p_max: 200,
            tolerance: 1e-6,
            eta: BTreeMap::new(),
            out_dir: None,
            hj_max: 500,
            eisenstein_max: 200,
        }
    }
}

fn parse_int(key: &str, v: &str) -> Result<i64> {
    v.parse()
        .map_err(|_| Error::Report(format!("{key}: expected an integer, got '{v}'")))
}

pub fn parse_families(v: &str) -> Result<Vec<Family>> {
    if v.trim() == "all" {
        return Ok(Family::ALL.to_vec());
    }
    v.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.trim().parse::<Family>().map_err(Error::from))
        .collect()
}

pub fn parse_tolerance(v: &str) -> Result<f64> {
    v.parse()
        .map_err(|_| Error::Report(format!("tolerance: expected a number, got '{v}'")))
}

impl SweepConfig {
    /// Applies recognized keys. Keys used only by single-spec commands
    /// (`family`, `m`, `n`, `q`, `p`, `format`) are accepted and ignored.
    pub fn apply(&mut self, map: &BTreeMap<String, String>) -> Result<()> {
        for (k, v) in map {
            match k.as_str() {
                "families" => self.families = parse_families(v)?,
                "m_max" => self.m_max = parse_int(k, v)?,
                "n_max" => self.n_max = parse_int(k, v)?,
                "p_max" => self.p_max = parse_int(k, v)?,
                "hj_max" => self.hj_max = parse_int(k, v)?,
                "eisenstein_max" => self.eisenstein_max = parse_int(k, v)?,
                "tolerance" => self.tolerance = parse_tolerance(v)?,
                "out" => self.out_dir = Some(PathBuf::from(v)),
                "family" | "m" | "n" | "q" | "p" | "format" => {}
                _ => match k.strip_prefix("eta.") {
                    Some(spec) => {
                        let spec: GroupSpec = spec.parse()?;
                        let r = rational::parse(v)
                            .ok_or_else(|| Error::Report(format!("{k}: expected a rational, got '{v}'")))?;
                        self.eta.insert(spec, r);
                    }
                    None => return Err(Error::Report(format!("unknown config key '{k}'"))),
                },
            }
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.tolerance > 0.0 && self.tolerance <= 1e-3) {
            return Err(Error::Report(format!(
                "tolerance {} outside (0, 1e-3]",
                self.tolerance
            )));
        }
        for (name, v) in [
            ("m_max", self.m_max),
            ("n_max", self.n_max),
            ("p_max", self.p_max),
            ("hj_max", self.hj_max),
            ("eisenstein_max", self.eisenstein_max),
        ] {
            if v < 1 {
                return Err(Error::Report(format!("{name} must be positive, got {v}")));
            }
        }
        Ok(())
    }
}

/// Renders `eta.<spec> = r/s` lines for a table of η values.
pub fn eta_lines(eta: &BTreeMap<GroupSpec, Ratio<i64>>) -> String {
    eta.iter()
        .map(|(s, r)| format!("eta.{s} = {r}\n"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_apply() {
        let text = "# sweep\nm_max = 10\nfamilies = dihedral, index3\n\ntolerance=1e-7\neta.dihedral:1,2 = -3/4\n";
        let map = parse_key_values(text).unwrap();
        let mut c = SweepConfig::default();
        c.apply(&map).unwrap();
        assert_eq!(c.m_max, 10);
        assert_eq!(c.families, vec![Family::Dihedral, Family::Index3]);
        assert_eq!(c.tolerance, 1e-7);
        assert_eq!(c.eta[&GroupSpec::ProdDihedral { m: 1, n: 2 }], Ratio::new(-3, 4));
        assert!(c.validate().is_ok());
        assert_eq!(eta_lines(&c.eta), "eta.dihedral:1,2 = -3/4\n");
    }

    #[test]
    fn rejects() {
        assert!(parse_key_values("novalue").is_err());
        let mut c = SweepConfig::default();
        assert!(c.apply(&parse_key_values("bogus = 1").unwrap()).is_err());
        c.tolerance = 0.0;
        assert!(c.validate().is_err());
        c.tolerance = 1e-2;
        assert!(c.validate().is_err());
        c.tolerance = 1e-15;
        assert!(c.validate().is_ok());
    }
}
