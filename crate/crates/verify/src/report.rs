use std::fmt::Write as _;

use serde::Serialize;

use crate::catalog::Params;
use crate::config::{OutputFormat, RunConfig};
use crate::error::VerifyError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

/// Outcome of one catalog identity, or the summary of one bijection rule.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub id: String,
    pub params: Params,
    pub cells_checked: u64,
    pub max_abs_deviation: u64,
    pub status: Status,
    pub elapsed_ms: u64,
    /// First failing cell, in grid order.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Serialize)]
struct Document<'a> {
    config: &'a RunConfig,
    reports: &'a [IdentityReport],
}

#[derive(Serialize)]
struct CsvRow<'a> {
    id: &'a str,
    params: String,
    cells_checked: u64,
    max_abs_deviation: u64,
    status: &'static str,
    elapsed_ms: u64,
    failure: &'a str,
}

fn params_inline(params: &Params) -> String {
    params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";")
}

pub fn render(reports: &[IdentityReport], cfg: &RunConfig) -> Result<String, VerifyError> {
    match cfg.format {
        OutputFormat::Json => {
            let mut out = serde_json::to_string_pretty(&Document { config: cfg, reports }).expect("reports serialize");
            out.push('\n');
            Ok(out)
        }
        OutputFormat::Csv => {
            let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
            for r in reports {
                w.serialize(CsvRow {
                    id: &r.id,
                    params: params_inline(&r.params),
                    cells_checked: r.cells_checked,
                    max_abs_deviation: r.max_abs_deviation,
                    status: r.status.name(),
                    elapsed_ms: r.elapsed_ms,
                    failure: r.failure.as_deref().unwrap_or(""),
                })
                .map_err(csv_error)?;
            }
            let bytes = w.into_inner().map_err(|e| csv_error(e.into_error().into()))?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
        OutputFormat::Text => Ok(render_text(reports)),
    }
}

fn csv_error(e: csv::Error) -> VerifyError {
    VerifyError::Config(format!("csv encoding failed: {e}"))
}

fn render_text(reports: &[IdentityReport]) -> String {
    let rows: Vec<[String; 6]> = reports
        .iter()
        .map(|r| {
            [
                r.id.clone(),
                r.status.name().to_string(),
                r.cells_checked.to_string(),
                r.max_abs_deviation.to_string(),
                format!("{}ms", r.elapsed_ms),
                params_inline(&r.params),
            ]
        })
        .collect();
    let header = ["id", "status", "cells", "max_dev", "elapsed", "params"].map(String::from);
    let mut widths = header.clone().map(|h| h.len());
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    for row in std::iter::once(&header).chain(&rows) {
        let line: Vec<String> = row.iter().zip(widths).map(|(c, w)| format!("{c:<w$}")).collect();
        writeln!(out, "{}", line.join("  ").trim_end()).unwrap();
    }
    for r in reports.iter().filter_map(|r| r.failure.as_deref()) {
        writeln!(out, "FAIL {r}").unwrap();
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    writeln!(out, "{} checks, {} failed", reports.len(), failed).unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(status: Status) -> IdentityReport {
        IdentityReport {
            id: "COR5A".into(),
            params: Params::from([("n_min".into(), 2), ("n_max".into(), 40)]),
            cells_checked: 39,
            max_abs_deviation: if status == Status::Pass { 0 } else { 1 },
            status,
            elapsed_ms: 3,
            failure: (status == Status::Fail).then(|| "COR5A fails at n=7: lhs 3, rhs 4".into()),
        }
    }

    #[test]
    fn json_field_order() {
        let cfg = RunConfig { format: OutputFormat::Json, ..RunConfig::default() };
        let out = render(&[sample(Status::Pass)], &cfg).unwrap();
        let keys = ["\"config\"", "\"reports\"", "\"id\"", "\"params\"", "\"cells_checked\"", "\"max_abs_deviation\"", "\"status\"", "\"elapsed_ms\""];
        let pos: Vec<usize> = keys.iter().map(|k| out.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]), "{out}");
        assert!(!out.contains("failure"));
        assert!(out.contains("\"format\": \"json\""));
    }

    #[test]
    fn csv_has_header_and_lf() {
        let cfg = RunConfig { format: OutputFormat::Csv, ..RunConfig::default() };
        let out = render(&[sample(Status::Fail)], &cfg).unwrap();
        let mut lines = out.lines();
        assert_eq!(lines.next(), Some("id,params,cells_checked,max_abs_deviation,status,elapsed_ms,failure"));
        assert_eq!(lines.next(), Some("COR5A,n_max=40;n_min=2,39,1,fail,3,\"COR5A fails at n=7: lhs 3, rhs 4\""));
        assert!(!out.contains('\r'));
    }

    #[test]
    fn text_aligns_and_locates_failures() {
        let out = render(&[sample(Status::Pass), sample(Status::Fail)], &RunConfig::default()).unwrap();
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0].find("status"), lines[1].find("pass"));
        assert!(out.contains("FAIL COR5A fails at n=7"));
        assert!(out.ends_with("2 checks, 1 failed\n"));
    }
}
