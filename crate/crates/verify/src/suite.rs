use std::time::Instant;

use rayon::prelude::*;
use sptk_core::bijection::{BijectionReport, BijectionRule, RuleId};
use sptk_core::spt::Caps;

use crate::catalog::Params;
use crate::config::RunConfig;
use crate::error::VerifyError;
use crate::report::{IdentityReport, Status};

/// Multiplicities checked for `id`. The lemma rules touch classes with
/// multiplicity `k + 1`, so they stop one short of `k_max`.
pub fn k_range(id: RuleId, cfg: &RunConfig) -> std::ops::RangeInclusive<u32> {
    match id {
        RuleId::Thm1a => 2..=cfg.k_max,
        _ => 1..=cfg.k_max.saturating_sub(1),
    }
}

/// Levels of `rule` whose classes all have weight at most `n_max`.
pub fn levels(rule: &BijectionRule, cfg: &RunConfig) -> Vec<u32> {
    (1..=cfg.n_max).take_while(|&l| rule.max_weight(l) <= cfg.n_max).collect()
}

fn caps(cfg: &RunConfig) -> Caps {
    Caps { n_max: cfg.n_max, ..Caps::DEFAULT }
}

/// Reports for one rule at one `k`, every admissible level, or just `level`.
pub fn run_rule(id: RuleId, k: u32, level: Option<u32>, cfg: &RunConfig) -> Result<Vec<BijectionReport>, VerifyError> {
    let rule = BijectionRule::new(id, k)?;
    let levels = match level {
        Some(l) => vec![l],
        None => levels(&rule, cfg),
    };
    Ok(levels.par_iter().map(|&l| rule.verify(l, caps(cfg))).collect::<Result<Vec<_>, _>>()?)
}

/// Every rule, every `k` in its range, every admissible level; sorted by
/// rule, then `k`, then level.
pub fn run_bijection_suite(cfg: &RunConfig) -> Result<Vec<BijectionReport>, VerifyError> {
    let mut jobs = Vec::new();
    for id in RuleId::ALL {
        for k in k_range(id, cfg) {
            let rule = BijectionRule::new(id, k)?;
            jobs.extend(levels(&rule, cfg).into_iter().map(|l| (rule, l)));
        }
    }
    let caps = caps(cfg);
    let mut reports = jobs.par_iter().map(|(rule, l)| rule.verify(*l, caps)).collect::<Result<Vec<_>, _>>()?;
    reports.sort_by_key(|r| (r.rule, r.n));
    Ok(reports)
}

fn level_name(id: RuleId) -> &'static str {
    match id {
        RuleId::Thm1a => "n",
        _ => "t",
    }
}

/// What went wrong in a failing report, for the summary line.
pub fn describe_failure(r: &BijectionReport) -> String {
    let mut what = Vec::new();
    if r.domain_size != r.codomain_size {
        what.push(format!("domain {} vs codomain {}", r.domain_size, r.codomain_size));
    }
    for (label, list) in [
        ("round-trip failures", &r.roundtrip_failures),
        ("codomain violations", &r.codomain_violations),
        ("domain violations", &r.domain_violations),
    ] {
        if let Some(first) = list.first() {
            what.push(format!("{} {label}, first {first}", list.len()));
        }
    }
    format!("{} fails at {}={}: {}", r.rule, level_name(r.rule.id()), r.n, what.join("; "))
}

/// One `BIJ-<RULE>` entry per rule. `cells_checked` counts (k, level)
/// reports and `max_abs_deviation` is the largest defect count among them.
pub fn summarise(reports: &[BijectionReport], cfg: &RunConfig, elapsed_ms: u64) -> Vec<IdentityReport> {
    RuleId::ALL
        .iter()
        .map(|&id| {
            let mine: Vec<&BijectionReport> = reports.iter().filter(|r| r.rule.id() == id).collect();
            let ks = k_range(id, cfg);
            let params = Params::from([
                ("k_min".to_string(), *ks.start()),
                ("k_max".to_string(), *ks.end()),
                ("weight_max".to_string(), cfg.n_max),
            ]);
            let max_dev = mine.iter().map(|r| r.defects() as u64).max().unwrap_or(0);
            let failure = mine.iter().find(|r| !r.passed()).map(|r| describe_failure(r));
            IdentityReport {
                id: format!("BIJ-{}", id.name()),
                params,
                cells_checked: mine.len() as u64,
                max_abs_deviation: max_dev,
                status: if failure.is_none() { Status::Pass } else { Status::Fail },
                elapsed_ms,
                failure,
            }
        })
        .collect()
}

/// The bijection suite, summarised, with the shared wall time.
pub fn bijection_reports(cfg: &RunConfig) -> Result<Vec<IdentityReport>, VerifyError> {
    let start = Instant::now();
    let reports = run_bijection_suite(cfg)?;
    Ok(summarise(&reports, cfg, start.elapsed().as_millis() as u64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> RunConfig {
        RunConfig { k_max: 3, n_max: 20, t_max: 9, ..RunConfig::default() }
    }

    #[test]
    fn suite_passes_and_is_sorted() {
        let cfg = small();
        let reports = run_bijection_suite(&cfg).unwrap();
        assert!(reports.iter().all(|r| r.passed()));
        assert!(reports.windows(2).all(|w| (w[0].rule, w[0].n) < (w[1].rule, w[1].n)));
        let expected: usize = RuleId::ALL
            .iter()
            .flat_map(|&id| k_range(id, &cfg).map(move |k| (id, k)))
            .map(|(id, k)| levels(&BijectionRule::new(id, k).unwrap(), &cfg).len())
            .sum();
        assert_eq!(reports.len(), expected);
        assert!(reports.iter().all(|r| r.rule.max_weight(r.n) <= cfg.n_max));
    }

    #[test]
    fn l3_even_k_is_empty() {
        let cfg = small();
        for r in run_rule(RuleId::L3, 2, None, &cfg).unwrap() {
            assert!(r.passed());
            assert_eq!(r.domain_size, 0);
        }
    }

    #[test]
    fn thm1a_domain_size() {
        let r = &run_rule(RuleId::Thm1a, 2, Some(3), &small()).unwrap()[0];
        assert!(r.passed());
        let spt = |k| sptk_core::count(&sptk_core::SptQuery::new(sptk_core::Family::D, k, 3).unwrap()).total;
        assert_eq!(r.domain_size as i64, spt(2) + spt(1));
    }

    #[test]
    fn summaries_cover_each_rule() {
        let cfg = small();
        let s = summarise(&run_bijection_suite(&cfg).unwrap(), &cfg, 0);
        let ids: Vec<&str> = s.iter().map(|r| r.id.as_str()).collect();
        assert_eq!(ids, ["BIJ-THM1A", "BIJ-L1", "BIJ-L2", "BIJ-L3", "BIJ-L4"]);
        assert!(s.iter().all(|r| r.passed() && r.cells_checked > 0));
    }

    #[test]
    fn failure_description_locates() {
        let cfg = small();
        let mut r = run_rule(RuleId::L2, 1, Some(4), &cfg).unwrap().remove(0);
        r.codomain_size += 1;
        assert!(describe_failure(&r).starts_with("L2[k=1] fails at t=4: domain"));
        let s = summarise(&[r], &cfg, 0);
        assert_eq!(s[2].status, Status::Fail);
        assert_eq!(s[2].max_abs_deviation, 1);
    }
}
