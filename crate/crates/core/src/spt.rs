//! Membership and counting for Spt k_d(n) and Spt k_do(n).
//!
//! Counts here come from filtering the full enumeration of partitions of n.
//! That makes this module the brute-force oracle that the bijections and the
//! series side are checked against, so it stays deliberately simple.

use crate::error::SptError;
use crate::partition::{for_each_partition, spt_member_parity, Parity, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Smallest part exactly k times, remaining parts distinct.
    D,
    /// As `D`, remaining parts also of opposite parity to the smallest part.
    Do,
}

impl Family {
    fn opposite_parity(self) -> bool {
        self == Family::Do
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::D => "D",
            Family::Do => "DO",
        }
    }
}

/// Upper bounds that keep exhaustive counting at desk scale.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub k_max: u32,
    pub n_max: u32,
}

impl Caps {
    pub const DEFAULT: Caps = Caps { k_max: 8, n_max: 60 };
}

impl Default for Caps {
    fn default() -> Self {
        Self::DEFAULT
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SptQuery {
    family: Family,
    k: u32,
    n: u32,
}

impl SptQuery {
    pub fn new(family: Family, k: u32, n: u32) -> Result<Self, SptError> {
        Self::with_caps(family, k, n, Caps::DEFAULT)
    }

    pub fn with_caps(family: Family, k: u32, n: u32, caps: Caps) -> Result<Self, SptError> {
        if k == 0 {
            return Err(SptError::ZeroK);
        }
        if n == 0 {
            return Err(SptError::ZeroN);
        }
        if k > caps.k_max {
            return Err(SptError::OverCap { name: "k", value: k, cap: caps.k_max });
        }
        if n > caps.n_max {
            return Err(SptError::OverCap { name: "n", value: n, cap: caps.n_max });
        }
        Ok(Self { family, k, n })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }
}

/// Class size split by the parity of t(π).
///
/// For family D these are spt k_d(n), A₀, A₁ and spt k'_d(n); for family DO
/// they are spt k_do(n), B₀, B₁ and spt k'_do(n).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct CountBundle {
    pub total: i64,
    pub even_t: i64,
    pub odd_t: i64,
    pub signed: i64,
}

impl CountBundle {
    pub const ZERO: CountBundle = CountBundle { total: 0, even_t: 0, odd_t: 0, signed: 0 };

    fn record(&mut self, parity: Parity) {
        match parity {
            Parity::Even => self.even_t += 1,
            Parity::Odd => self.odd_t += 1,
        }
        self.total = self.even_t + self.odd_t;
        self.signed = self.even_t - self.odd_t;
    }
}

pub fn is_member(p: &Partition, q: &SptQuery) -> Result<bool, SptError> {
    if p.weight() != q.n {
        return Err(SptError::WeightMismatch { partition: p.clone(), n: q.n });
    }
    Ok(spt_member_parity(p.parts(), q.k, q.family.opposite_parity()).is_some())
}

/// Exhaustive count of the class named by `q`; zero when `n < k`.
pub fn count(q: &SptQuery) -> CountBundle {
    if q.n < q.k {
        return CountBundle::ZERO;
    }
    let mut bundle = CountBundle::ZERO;
    for_each_partition(q.n, |parts| {
        if let Some(parity) = spt_member_parity(parts, q.k, q.family.opposite_parity()) {
            bundle.record(parity);
        }
    });
    bundle
}

/// Bundles for every `k` in `1..=k_max` at weight `n` from a single pass over
/// the partitions of `n`. Index `k - 1` holds the bundle for `k`.
pub fn count_row(family: Family, n: u32, k_max: u32) -> Vec<CountBundle> {
    let mut row = vec![CountBundle::ZERO; k_max as usize];
    if n == 0 {
        return row;
    }
    for_each_partition(n, |parts| {
        let s = parts[parts.len() - 1];
        let mult = parts.iter().rev().take_while(|&&p| p == s).count();
        if mult > k_max as usize {
            return;
        }
        if let Some(parity) = spt_member_parity(parts, mult as u32, family.opposite_parity()) {
            row[mult - 1].record(parity);
        }
    });
    row
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{count_base, enumerate_partitions, BaseKind, PartitionStats};

    fn p(parts: &[u32]) -> Partition {
        Partition::from_parts(parts.to_vec()).unwrap()
    }

    fn q(family: Family, k: u32, n: u32) -> SptQuery {
        SptQuery::new(family, k, n).unwrap()
    }

    #[test]
    fn membership_examples() {
        assert!(is_member(&p(&[2, 1, 1]), &q(Family::D, 2, 4)).unwrap());
        assert!(!is_member(&p(&[3, 1, 1]), &q(Family::Do, 2, 5)).unwrap());
        assert!(is_member(&p(&[4, 1]), &q(Family::Do, 1, 5)).unwrap());
        assert!(!is_member(&p(&[1, 1, 1, 1]), &q(Family::D, 2, 4)).unwrap());
    }

    #[test]
    fn membership_rejects_weight_mismatch() {
        let err = is_member(&p(&[2, 1]), &q(Family::D, 1, 4)).unwrap_err();
        assert!(matches!(err, SptError::WeightMismatch { n: 4, .. }));
    }

    #[test]
    fn query_validation() {
        assert_eq!(SptQuery::new(Family::D, 0, 3), Err(SptError::ZeroK));
        assert_eq!(SptQuery::new(Family::D, 1, 0), Err(SptError::ZeroN));
        assert!(matches!(SptQuery::new(Family::D, 9, 3), Err(SptError::OverCap { name: "k", .. })));
        assert!(matches!(SptQuery::new(Family::Do, 1, 61), Err(SptError::OverCap { name: "n", .. })));
        let tight = Caps { k_max: 8, n_max: 20 };
        assert!(SptQuery::with_caps(Family::D, 1, 21, tight).is_err());
    }

    #[test]
    fn count_examples() {
        let b = count(&q(Family::Do, 1, 5));
        assert_eq!(b, CountBundle { total: 3, even_t: 1, odd_t: 2, signed: -1 });
        assert_eq!(count(&q(Family::D, 3, 4)).total, 0);
        assert_eq!(count(&q(Family::D, 5, 3)), CountBundle::ZERO);
        assert_eq!(count(&q(Family::D, 1, 5)).total, 3);
        assert_eq!(count(&q(Family::D, 2, 4)).total, 2);
    }

    #[test]
    fn bundle_invariants_and_row_agreement() {
        for family in [Family::D, Family::Do] {
            for n in 1..=24 {
                let row = count_row(family, n, 6);
                for k in 1..=6u32 {
                    let b = count(&q(family, k, n));
                    assert_eq!(row[k as usize - 1], b, "{family:?} k={k} n={n}");
                    assert_eq!(b.total, b.even_t + b.odd_t);
                    assert_eq!(b.signed, b.even_t - b.odd_t);
                    assert!(b.signed.abs() <= b.total);
                    if n < k {
                        assert_eq!(b, CountBundle::ZERO);
                    }
                }
            }
        }
    }

    #[test]
    fn counter_agrees_with_membership_filter() {
        for family in [Family::D, Family::Do] {
            for n in 1..=20 {
                for k in 1..=5 {
                    let query = q(family, k, n);
                    let members = enumerate_partitions(n).filter(|x| is_member(x, &query).unwrap()).count();
                    assert_eq!(count(&query).total, members as i64);
                }
            }
        }
    }

    #[test]
    fn spt1_d_is_distinct_parts() {
        for n in 1..=30 {
            assert_eq!(count(&q(Family::D, 1, n)).total, count_base(BaseKind::Pd, n));
        }
    }

    #[test]
    fn do_parity_law_holds_for_members() {
        for n in 1..=30u32 {
            for k in 1..=6u32 {
                let query = q(Family::Do, k, n);
                for x in enumerate_partitions(n).filter(|x| is_member(x, &query).unwrap()) {
                    let st = PartitionStats::of(x.parts()).unwrap();
                    let rhs = k as usize * st.smallest as usize + st.larger * (st.smallest as usize + 1);
                    assert_eq!(n as usize % 2, rhs % 2, "{x}");
                }
            }
        }
    }
}
