use std::path::Path;

use super::InvariantReport;
use crate::error::{Error, Result};
use crate::resolution::to_dot;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    Resolution,
    /// The resolution star together with the compactification star.
    Compactification,
}

pub fn export_dot(report: &InvariantReport, kind: GraphKind) -> Result<String> {
    let name = report.spec.to_string();
    match kind {
        GraphKind::Resolution => Ok(to_dot(&name, &[report.resolution.graph.clone()])),
        GraphKind::Compactification => {
            let c = report
                .compactification
                .as_ref()
                .ok_or_else(|| Error::Report(format!("{name} has no compactification graph")))?;
            Ok(to_dot(&name, &c.configuration(&report.resolution.graph)))
        }
    }
}

pub fn write_dot(report: &InvariantReport, kind: GraphKind, path: &Path) -> Result<()> {
    let text = export_dot(report, kind)?;
    std::fs::write(path, text).map_err(|e| Error::Report(format!("writing {}: {e}", path.display())))
}
