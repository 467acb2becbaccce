use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown identity {id:?}; known identities: {}", catalog.join(", "))]
    UnknownIdentity { id: String, catalog: Vec<&'static str> },
    #[error("configuration error: {0}")]
    Config(String),
    #[error("cannot write {}: {source}", path.display())]
    Output { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Bijection(#[from] sptk_core::BijectionError),
    #[error(transparent)]
    Series(#[from] sptk_core::SeriesError),
    #[error(transparent)]
    Spt(#[from] sptk_core::SptError),
}

impl VerifyError {
    /// Process exit code for this error: failures of checks are not errors,
    /// so everything here is a configuration problem.
    pub fn exit_code(&self) -> u8 {
        2
    }
}
