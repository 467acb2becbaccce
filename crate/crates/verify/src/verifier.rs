use std::time::Instant;

use rayon::prelude::*;
use sptk_core::qseries::Theorem;

use crate::catalog::{self, Identity, CATALOG};
use crate::config::RunConfig;
use crate::error::VerifyError;
use crate::report::{IdentityReport, Status};
use crate::tables::Tables;

/// Runs catalog entries against one shared set of tables.
pub struct Verifier {
    cfg: RunConfig,
    tables: Tables,
}

impl Verifier {
    /// Tables cover multiplicities up to `k_max` and weights up to `n_max`,
    /// which the validated config guarantees is enough for every grid.
    pub fn new(cfg: RunConfig) -> Result<Self, VerifyError> {
        let tables = Tables::build(cfg.k_max, cfg.n_max)?;
        Ok(Self { cfg, tables })
    }

    pub fn config(&self) -> &RunConfig {
        &self.cfg
    }

    pub fn tables(&self) -> &Tables {
        &self.tables
    }

    pub fn check(&self, entry: &Identity) -> Result<IdentityReport, VerifyError> {
        let start = Instant::now();
        let (params, cells) = entry.grid.cells(entry.id, &self.cfg)?;
        let mut max_dev = 0u64;
        let mut failure = None;
        for &cell in &cells {
            let sides = (entry.eval)(&self.tables, cell);
            for (i, &(lhs, rhs)) in sides.iter().enumerate() {
                let dev = lhs.abs_diff(rhs);
                if dev > 0 && failure.is_none() {
                    let eq = if sides.len() > 1 { format!(" (equation {})", i + 1) } else { String::new() };
                    failure = Some(format!("{} fails at {}{eq}: lhs {lhs}, rhs {rhs}", entry.id, entry.grid.describe(cell)));
                }
                max_dev = max_dev.max(dev);
            }
        }
        Ok(IdentityReport {
            id: entry.id.to_string(),
            params,
            cells_checked: cells.len() as u64,
            max_abs_deviation: max_dev,
            status: if max_dev == 0 { Status::Pass } else { Status::Fail },
            elapsed_ms: start.elapsed().as_millis() as u64,
            failure,
        })
    }

    /// Every catalog entry, in catalog order.
    pub fn check_all(&self) -> Result<Vec<IdentityReport>, VerifyError> {
        CATALOG.par_iter().map(|e| self.check(e)).collect()
    }
}

pub fn check_identity(id: &str, cfg: &RunConfig) -> Result<IdentityReport, VerifyError> {
    let entry = catalog::lookup(id)?;
    // fail fast on the grid before paying for the tables
    entry.grid.cells(entry.id, cfg)?;
    Verifier::new(*cfg)?.check(entry)
}

/// Enumeration vs generating function vs closed form for every `k ≤ k_max`
/// and `n ∈ [1, n_max]`.
pub fn check_theorem_series(theorem: Theorem, cfg: &RunConfig) -> Result<IdentityReport, VerifyError> {
    check_identity(theorem.name(), cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cor5a_small_range() {
        let cfg = RunConfig { n_max: 40, t_max: 19, ..RunConfig::default() };
        let r = check_identity("COR5A", &cfg).unwrap();
        assert!(r.passed());
        assert_eq!((r.cells_checked, r.max_abs_deviation), (39, 0));
    }

    #[test]
    fn thm1_cells() {
        let cfg = RunConfig { k_max: 4, n_max: 40, t_max: 19, ..RunConfig::default() };
        let r = check_theorem_series(Theorem::Thm1, &cfg).unwrap();
        assert!(r.passed());
        assert_eq!(r.cells_checked, 160);
    }

    #[test]
    fn deviation_is_located() {
        let cfg = RunConfig { k_max: 2, n_max: 12, t_max: 5, ..RunConfig::default() };
        let wrong = Identity {
            id: "OFF-BY-ONE",
            statement: "spt2_d(n) = 2p_d(n-1) - p_d(n) + [n = 7]",
            grid: crate::catalog::Grid::N { n_min: 2, k: 2 },
            eval: |t, c| {
                let n = c.x as i64;
                vec![(t.spt_d(2, n), 2 * t.pd(n - 1) - t.pd(n) + i64::from(n == 7))]
            },
        };
        let r = Verifier::new(cfg).unwrap().check(&wrong).unwrap();
        assert_eq!((r.status, r.max_abs_deviation), (Status::Fail, 1));
        assert_eq!(r.failure.as_deref(), Some("OFF-BY-ONE fails at n=7: lhs 3, rhs 4"));
    }

    #[test]
    fn whole_catalog_passes_on_small_bounds() {
        let cfg = RunConfig { k_max: 4, n_max: 30, t_max: 14, ..RunConfig::default() };
        let v = Verifier::new(cfg).unwrap();
        for r in v.check_all().unwrap() {
            assert!(r.passed(), "{r:?}");
            assert!(r.cells_checked > 0);
        }
    }
}
