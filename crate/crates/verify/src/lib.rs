//! Runs every counting identity over configurable ranges by independent
//! routes (enumeration, bijection, series coefficients) and reports the
//! results as text, JSON or CSV.

pub mod catalog;
pub mod config;
pub mod error;
pub mod report;
pub mod suite;
pub mod table;
pub mod tables;
pub mod verifier;

use std::path::Path;

pub use catalog::{Identity, CATALOG};
pub use config::{OutputFormat, RunConfig};
pub use error::VerifyError;
pub use report::{IdentityReport, Status};
pub use suite::run_bijection_suite;
pub use table::{emit_table, TableKind};
pub use verifier::{check_identity, check_theorem_series, Verifier};

/// Every catalog identity followed by the `BIJ-*` bijection summaries.
pub fn verify_all(cfg: &RunConfig) -> Result<Vec<IdentityReport>, VerifyError> {
    let (identities, bijections) = rayon::join(|| Verifier::new(*cfg)?.check_all(), || suite::bijection_reports(cfg));
    let mut reports = identities?;
    reports.extend(bijections?);
    Ok(reports)
}

/// Writes to `path`, or stdout when absent.
pub fn write_output(path: Option<&Path>, text: &str) -> Result<(), VerifyError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|source| VerifyError::Output { path: p.to_path_buf(), source }),
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            // a closed pipe is not worth a panic
            let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
            Ok(())
        }
    }
}
