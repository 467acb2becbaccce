//! Exhaustive round trips and the counting identities they imply.

use sptk_core::bijection::{verify_rule, BijectionRule, RuleId};
use sptk_core::partition::{count_base, BaseKind, ClassTag};
use sptk_core::spt::{count, Family, SptQuery};

fn members(tag: ClassTag) -> i64 {
    tag.members().len() as i64
}

fn b(parity_even: bool, k: u32, w: i64) -> i64 {
    if w <= 0 {
        return 0;
    }
    let weight = w as u32;
    if parity_even {
        members(ClassTag::B0 { k, weight })
    } else {
        members(ClassTag::B1 { k, weight })
    }
}

fn base(kind: BaseKind, n: i64) -> i64 {
    if n < 0 {
        0
    } else {
        count_base(kind, n as u32)
    }
}

#[test]
fn all_rules_round_trip_to_weight_thirty() {
    for id in RuleId::ALL {
        for k in id.min_k()..=5 {
            let rule = BijectionRule::new(id, k).unwrap();
            for level in 1..=30 {
                if rule.max_weight(level) > 30 {
                    break;
                }
                let rep = verify_rule(&rule, level).unwrap();
                assert!(rep.passed(), "{rule} level {level}: {rep:?}");
            }
        }
    }
}

#[test]
fn thm1a_sizes_match_counters() {
    for k in 2..=5u32 {
        let rule = BijectionRule::new(RuleId::Thm1a, k).unwrap();
        for n in 1..=25u32 {
            let rep = verify_rule(&rule, n).unwrap();
            let spt = |k: u32, n: i64| {
                if n <= 0 {
                    0
                } else {
                    count(&SptQuery::new(Family::D, k, n as u32).unwrap()).total
                }
            };
            let lhs = spt(k, n as i64) + spt(k - 1, n as i64);
            let rhs = spt(k - 1, n as i64 - k as i64 + 1) + base(BaseKind::Pd, n as i64 - k as i64 + 1);
            assert_eq!(rep.domain_size as i64, lhs);
            assert_eq!(rep.codomain_size as i64, rhs);
        }
    }
}

#[test]
fn l4_k1_t3_sizes() {
    let rule = BijectionRule::new(RuleId::L4, 1).unwrap();
    let rep = verify_rule(&rule, 3).unwrap();
    assert!(rep.passed());
    let lhs = b(true, 1, 6) + b(false, 2, 7);
    let rhs = b(true, 1, 4) + base(BaseKind::Pde, 5) + base(BaseKind::Pdo, 4);
    assert_eq!(rep.domain_size as i64, lhs);
    assert_eq!(rep.codomain_size as i64, rhs);
}

#[test]
fn parity_empty_configurations() {
    // odd k for L1, even k for L3
    for t in 1..=20u32 {
        for k in [1u32, 3, 5] {
            let rep = verify_rule(&BijectionRule::new(RuleId::L1, k).unwrap(), t).unwrap();
            assert_eq!((rep.domain_size, rep.codomain_size), (0, 0), "L1 k={k} t={t}");
        }
        for k in [2u32, 4] {
            let rep = verify_rule(&BijectionRule::new(RuleId::L3, k).unwrap(), t).unwrap();
            assert_eq!((rep.domain_size, rep.codomain_size), (0, 0), "L3 k={k} t={t}");
        }
    }
}

#[test]
fn forward_branches_cover_every_case() {
    use std::collections::BTreeSet;
    for id in RuleId::ALL {
        let mut seen = BTreeSet::new();
        for k in id.min_k()..=4 {
            let rule = BijectionRule::new(id, k).unwrap();
            for level in 1..=14 {
                for tag in rule.domain(level) {
                    for lam in tag.members() {
                        let m = rule.forward(&lam).unwrap();
                        assert!(m.image().weight() < lam.weight());
                        seen.insert(m.case());
                    }
                }
            }
        }
        let expected = match id {
            RuleId::Thm1a | RuleId::L1 | RuleId::L3 => 4,
            RuleId::L2 | RuleId::L4 => 6,
        };
        assert_eq!(seen.len(), expected, "{id}: {seen:?}");
    }
}
