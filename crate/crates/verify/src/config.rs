use serde::Serialize;
use sptk_core::Caps;

use crate::error::VerifyError;

/// Environment variable that can lower (never raise) the weight cap.
pub const MAX_N_ENV: &str = "SPTK_MAX_N";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

/// Ranges for a verification run. Everything is deterministic; there is no seed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub k_max: u32,
    pub n_max: u32,
    pub t_max: u32,
    pub format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self { k_max: 6, n_max: 60, t_max: 25, format: OutputFormat::Text }
    }
}

impl RunConfig {
    /// Defaults clamped to `caps`.
    pub fn defaults_within(caps: Caps) -> Self {
        let d = Self::default();
        let n_max = d.n_max.min(caps.n_max);
        Self { k_max: d.k_max.min(caps.k_max), n_max, t_max: d.t_max.min(n_max.saturating_sub(1) / 2), ..d }
    }

    /// Checks the ranges against `caps`. Lemma weights reach `2t + 1`, and
    /// lemma classes reach multiplicity `k + 1`, which the tables only hold
    /// up to `k_max`.
    pub fn validate(&self, caps: Caps) -> Result<(), VerifyError> {
        let bad = |msg: String| Err(VerifyError::Config(msg));
        if self.k_max == 0 || self.n_max == 0 || self.t_max == 0 {
            return bad("k_max, n_max and t_max must all be positive".into());
        }
        if self.k_max > caps.k_max {
            return bad(format!("k_max = {} exceeds the cap {}", self.k_max, caps.k_max));
        }
        if self.n_max > caps.n_max {
            return bad(format!("n_max = {} exceeds the cap {}", self.n_max, caps.n_max));
        }
        if 2 * self.t_max + 1 > self.n_max {
            return bad(format!("t_max = {} needs weights up to {} > n_max = {}", self.t_max, 2 * self.t_max + 1, self.n_max));
        }
        Ok(())
    }
}

/// Default caps, lowered by `SPTK_MAX_N` when it is set below them.
pub fn caps_from_env() -> Result<Caps, VerifyError> {
    caps_with_override(std::env::var(MAX_N_ENV).ok().as_deref())
}

pub fn caps_with_override(value: Option<&str>) -> Result<Caps, VerifyError> {
    let mut caps = Caps::DEFAULT;
    if let Some(raw) = value {
        let n: u32 = raw
            .trim()
            .parse()
            .map_err(|_| VerifyError::Config(format!("{MAX_N_ENV}={raw:?} is not a non-negative integer")))?;
        caps.n_max = caps.n_max.min(n);
    }
    Ok(caps)
}
