//! Canonical partitions, their statistics, exhaustive enumeration and the
//! base counting functions for distinct-part partitions.
//!
//! A [`Partition`] always stores its parts in non-increasing order, so two
//! partitions are equal exactly when their part lists are equal.

use std::fmt;

use crate::error::PartitionError;

/// A partition of a non-negative integer: a non-increasing list of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
    weight: u32,
}

impl Partition {
    /// The empty partition of 0.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from parts in any order.
    pub fn from_parts(mut parts: Vec<u32>) -> Result<Self, PartitionError> {
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(PartitionError::NonPositivePart { index: pos, value: 0 });
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self::from_sorted_unchecked(parts))
    }

    /// Caller guarantees `parts` is non-increasing with every part `>= 1`.
    pub(crate) fn from_sorted_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last().is_none_or(|&p| p >= 1));
        let weight = parts.iter().sum();
        Self { parts, weight }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u32 {
        self.weight
    }

    /// Number of parts, written ℓ(π) in the literature.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn smallest(&self) -> Option<u32> {
        self.parts.last().copied()
    }

    pub fn has_distinct_parts(&self) -> bool {
        is_strictly_decreasing(&self.parts)
    }

    pub fn stats(&self) -> Result<PartitionStats, PartitionError> {
        PartitionStats::of(&self.parts)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Builds a canonical partition from signed raw entries, rejecting any entry `<= 0`.
pub fn make_partition(raw: &[i64]) -> Result<Partition, PartitionError> {
    let mut parts = Vec::with_capacity(raw.len());
    for (index, &value) in raw.iter().enumerate() {
        if value <= 0 {
            return Err(PartitionError::NonPositivePart { index, value });
        }
        let part = u32::try_from(value).map_err(|_| PartitionError::PartTooLarge { index, value })?;
        parts.push(part);
    }
    Partition::from_parts(parts)
}

/// Smallest-part statistics of a non-empty partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PartitionStats {
    /// s(π)
    pub smallest: u32,
    /// Multiplicity of s(π).
    pub smallest_mult: usize,
    /// ss(π); `None` when every part equals s(π).
    pub second_smallest: Option<u32>,
    /// t(π), the number of parts strictly greater than s(π).
    pub larger: usize,
    /// ℓ(π)
    pub len: usize,
}

impl PartitionStats {
    /// Statistics of a non-increasing part list.
    pub fn of(parts: &[u32]) -> Result<Self, PartitionError> {
        let &smallest = parts.last().ok_or(PartitionError::EmptyStats)?;
        let smallest_mult = parts.iter().rev().take_while(|&&p| p == smallest).count();
        let larger = parts.len() - smallest_mult;
        let second_smallest = (larger > 0).then(|| parts[larger - 1]);
        Ok(Self { smallest, smallest_mult, second_smallest, larger, len: parts.len() })
    }
}

fn is_strictly_decreasing(parts: &[u32]) -> bool {
    parts.windows(2).all(|w| w[0] > w[1])
}

/// Parity of t(π) for a member of Spt k_d (or Spt k_do when
/// `opposite_parity` is set), or `None` when `parts` is not a member.
pub(crate) fn spt_member_parity(parts: &[u32], k: u32, opposite_parity: bool) -> Option<Parity> {
    let stats = PartitionStats::of(parts).ok()?;
    if stats.smallest_mult != k as usize {
        return None;
    }
    let above = &parts[..stats.larger];
    if !is_strictly_decreasing(above) {
        return None;
    }
    if opposite_parity && above.iter().any(|&p| (p - stats.smallest) % 2 == 0) {
        return None;
    }
    Some(Parity::of(stats.larger))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: usize) -> Self {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn of_u32(n: u32) -> Self {
        Self::of(n as usize)
    }
}

/// Which partition class a partition belongs to, with its weight.
///
/// Bijections return one of these alongside every image, and their inverses
/// take one, because a raw partition can belong to several classes at once
/// (every member of Spt 1_d(n) is also a distinct-part partition of n).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassTag {
    /// Spt k_d(n): smallest part exactly `k` times, the rest distinct.
    SptD { k: u32, weight: u32 },
    /// Spt k_do(n): as `SptD`, the rest also of opposite parity to the smallest part.
    SptDo { k: u32, weight: u32 },
    /// Members of Spt k_do(n) with an even number of parts above the smallest.
    B0 { k: u32, weight: u32 },
    /// Members of Spt k_do(n) with an odd number of parts above the smallest.
    B1 { k: u32, weight: u32 },
    /// Distinct parts.
    Pd { weight: u32 },
    /// Distinct even parts.
    Pde { weight: u32 },
    /// Distinct odd parts.
    Pdo { weight: u32 },
}

impl ClassTag {
    pub fn weight(&self) -> u32 {
        match *self {
            ClassTag::SptD { weight, .. }
            | ClassTag::SptDo { weight, .. }
            | ClassTag::B0 { weight, .. }
            | ClassTag::B1 { weight, .. }
            | ClassTag::Pd { weight }
            | ClassTag::Pde { weight }
            | ClassTag::Pdo { weight } => weight,
        }
    }

    pub fn k(&self) -> Option<u32> {
        match *self {
            ClassTag::SptD { k, .. }
            | ClassTag::SptDo { k, .. }
            | ClassTag::B0 { k, .. }
            | ClassTag::B1 { k, .. } => Some(k),
            ClassTag::Pd { .. } | ClassTag::Pde { .. } | ClassTag::Pdo { .. } => None,
        }
    }

    /// Short name used in reports, e.g. `B1(2,6)` or `PDE(4)`.
    pub fn label(&self) -> String {
        match *self {
            ClassTag::SptD { k, weight } => format!("SPTKD({k},{weight})"),
            ClassTag::SptDo { k, weight } => format!("SPTKDO({k},{weight})"),
            ClassTag::B0 { k, weight } => format!("B0({k},{weight})"),
            ClassTag::B1 { k, weight } => format!("B1({k},{weight})"),
            ClassTag::Pd { weight } => format!("PD({weight})"),
            ClassTag::Pde { weight } => format!("PDE({weight})"),
            ClassTag::Pdo { weight } => format!("PDO({weight})"),
        }
    }

    pub fn contains(&self, p: &Partition) -> bool {
        self.check(p).is_ok()
    }

    /// Membership test that names the first violated condition.
    pub fn check(&self, p: &Partition) -> Result<(), PartitionError> {
        let fail = |reason: String| Err(PartitionError::NotInClass { class: self.label(), partition: p.clone(), reason });
        if p.weight() != self.weight() {
            return fail(format!("weight {} differs from {}", p.weight(), self.weight()));
        }
        match *self {
            ClassTag::SptD { k, .. } => check_spt(p, k, false, None).or_else(fail),
            ClassTag::SptDo { k, .. } => check_spt(p, k, true, None).or_else(fail),
            ClassTag::B0 { k, .. } => check_spt(p, k, true, Some(Parity::Even)).or_else(fail),
            ClassTag::B1 { k, .. } => check_spt(p, k, true, Some(Parity::Odd)).or_else(fail),
            ClassTag::Pd { .. } => check_distinct(p, None).or_else(fail),
            ClassTag::Pde { .. } => check_distinct(p, Some(Parity::Even)).or_else(fail),
            ClassTag::Pdo { .. } => check_distinct(p, Some(Parity::Odd)).or_else(fail),
        }
    }

    /// All members of the class in decreasing lexicographic order.
    pub fn members(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        match *self {
            ClassTag::SptD { k, weight } => spt_members(k, weight, false, None, &mut out),
            ClassTag::SptDo { k, weight } => spt_members(k, weight, true, None, &mut out),
            ClassTag::B0 { k, weight } => spt_members(k, weight, true, Some(Parity::Even), &mut out),
            ClassTag::B1 { k, weight } => spt_members(k, weight, true, Some(Parity::Odd), &mut out),
            ClassTag::Pd { weight } => distinct_members(weight, 1, 1, &[], &mut out),
            ClassTag::Pde { weight } => distinct_members(weight, 2, 2, &[], &mut out),
            ClassTag::Pdo { weight } => distinct_members(weight, 1, 2, &[], &mut out),
        }
        out.sort_unstable_by(|a, b| b.parts.cmp(&a.parts));
        out
    }
}

/// Checks membership of `p` in the class named by `tag`.
pub fn classify(p: &Partition, tag: &ClassTag) -> Result<(), PartitionError> {
    tag.check(p)
}

fn check_spt(p: &Partition, k: u32, opposite_parity: bool, t_parity: Option<Parity>) -> Result<(), String> {
    let stats = p.stats().map_err(|_| "empty partition".to_string())?;
    if stats.smallest_mult != k as usize {
        return Err(format!("smallest part {} occurs {} times, expected {k}", stats.smallest, stats.smallest_mult));
    }
    let above = &p.parts()[..stats.larger];
    if let Some(w) = above.windows(2).find(|w| w[0] == w[1]) {
        return Err(format!("part {} above the smallest part repeats", w[0]));
    }
    if opposite_parity {
        if let Some(&bad) = above.iter().find(|&&x| (x - stats.smallest) % 2 == 0) {
            return Err(format!("part {bad} has the same parity as the smallest part {}", stats.smallest));
        }
    }
    if let Some(want) = t_parity {
        if Parity::of(stats.larger) != want {
            return Err(format!("{} parts above the smallest part, expected {want:?} count", stats.larger));
        }
    }
    Ok(())
}

fn check_distinct(p: &Partition, parity: Option<Parity>) -> Result<(), String> {
    if let Some(w) = p.parts().windows(2).find(|w| w[0] == w[1]) {
        return Err(format!("part {} repeats", w[0]));
    }
    if let Some(want) = parity {
        if let Some(&bad) = p.parts().iter().find(|&&x| Parity::of_u32(x) != want) {
            return Err(format!("part {bad} is not {want:?}"));
        }
    }
    Ok(())
}

/// Pushes every partition of `remaining` into distinct parts drawn from
/// `first, first + step, first + 2 step, ...`, each prefixed by `tail` (appended
/// as the smallest parts).
fn distinct_members(remaining: u32, first: u32, step: u32, tail: &[u32], out: &mut Vec<Partition>) {
    let mut stack = Vec::new();
    distinct_rec(remaining, first, step, &mut stack, &mut |chosen| {
        let mut parts: Vec<u32> = chosen.iter().rev().copied().collect();
        parts.extend_from_slice(tail);
        out.push(Partition::from_sorted_unchecked(parts));
    });
}

// Chooses parts in increasing order so `chosen` is increasing.
fn distinct_rec(remaining: u32, next: u32, step: u32, chosen: &mut Vec<u32>, emit: &mut dyn FnMut(&[u32])) {
    if remaining == 0 {
        emit(chosen);
        return;
    }
    let mut part = next;
    while part <= remaining {
        chosen.push(part);
        distinct_rec(remaining - part, part + step, step, chosen, emit);
        chosen.pop();
        part += step;
    }
}

fn spt_members(k: u32, weight: u32, opposite_parity: bool, t_parity: Option<Parity>, out: &mut Vec<Partition>) {
    if k == 0 || weight == 0 {
        return;
    }
    let mut start = out.len();
    for s in 1..=weight / k {
        let rest = weight - k * s;
        let tail = vec![s; k as usize];
        let (first, step) = if opposite_parity { (s + 1, 2) } else { (s + 1, 1) };
        distinct_members(rest, first, step, &tail, out);
        if let Some(want) = t_parity {
            let mut i = start;
            while i < out.len() {
                if Parity::of(out[i].len() - k as usize) == want {
                    i += 1;
                } else {
                    out.swap_remove(i);
                }
            }
        }
        start = out.len();
    }
}

/// Iterator over all partitions of `n` in decreasing lexicographic order.
///
/// `n = 0` yields the empty partition once.
#[derive(Clone, Debug)]
pub struct Partitions {
    current: Vec<u32>,
    done: bool,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let out = Partition::from_sorted_unchecked(self.current.clone());
        self.done = !advance(&mut self.current);
        Some(out)
    }
}

pub fn enumerate_partitions(n: u32) -> Partitions {
    let current = if n == 0 { Vec::new() } else { vec![n] };
    Partitions { current, done: false }
}

/// Members of `tag`'s class obtained by filtering the full enumeration.
pub fn enumerate_filtered(tag: ClassTag) -> impl Iterator<Item = Partition> {
    enumerate_partitions(tag.weight()).filter(move |p| tag.contains(p))
}

/// Calls `visit` on every partition of `n` (decreasing lexicographic order)
/// without allocating per partition.
pub fn for_each_partition(n: u32, mut visit: impl FnMut(&[u32])) {
    let mut current = if n == 0 { Vec::new() } else { vec![n] };
    loop {
        visit(&current);
        if !advance(&mut current) {
            return;
        }
    }
}

/// Steps `parts` to its lexicographic predecessor; false once `(1,1,...,1)` is passed.
fn advance(parts: &mut Vec<u32>) -> bool {
    let mut freed = 0u32;
    while parts.last() == Some(&1) {
        parts.pop();
        freed += 1;
    }
    let Some(last) = parts.last_mut() else {
        return false;
    };
    *last -= 1;
    let fill = *last;
    freed += 1;
    while freed >= fill {
        parts.push(fill);
        freed -= fill;
    }
    if freed > 0 {
        parts.push(freed);
    }
    true
}

/// The four base counting functions over distinct-part partitions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BaseKind {
    /// p_d(n)
    Pd,
    /// p_de(n)
    Pde,
    /// p_do(n)
    Pdo,
    /// p'_do(n): even-length minus odd-length distinct-odd-part partitions.
    PdoSigned,
}

impl BaseKind {
    pub const ALL: [BaseKind; 4] = [BaseKind::Pd, BaseKind::Pde, BaseKind::Pdo, BaseKind::PdoSigned];

    pub fn name(self) -> &'static str {
        match self {
            BaseKind::Pd => "PD",
            BaseKind::Pde => "PDE",
            BaseKind::Pdo => "PDO",
            BaseKind::PdoSigned => "PDO_SIGNED",
        }
    }
}

/// Counts distinct-part partitions of `n` of the given kind by generating them.
///
/// All four kinds equal 1 at `n = 0` (the empty partition).
pub fn count_base(kind: BaseKind, n: u32) -> i64 {
    let (first, step) = match kind {
        BaseKind::Pd => (1, 1),
        BaseKind::Pde => (2, 2),
        BaseKind::Pdo | BaseKind::PdoSigned => (1, 2),
    };
    let signed = kind == BaseKind::PdoSigned;
    let mut total = 0i64;
    distinct_rec(n, first, step, &mut Vec::new(), &mut |chosen| {
        total += if signed && chosen.len() % 2 == 1 { -1 } else { 1 };
    });
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn parts(p: &[u32]) -> Partition {
        Partition::from_parts(p.to_vec()).unwrap()
    }

    #[test]
    fn make_partition_sorts_and_weighs() {
        let p = make_partition(&[1, 2, 2, 3]).unwrap();
        assert_eq!(p.parts(), &[3, 2, 2, 1]);
        assert_eq!(p.weight(), 8);

        let e = make_partition(&[]).unwrap();
        assert!(e.is_empty());
        assert_eq!(e.weight(), 0);

        assert_eq!(make_partition(&[5]).unwrap().parts(), &[5]);
    }

    #[test]
    fn make_partition_rejects_non_positive() {
        assert!(matches!(
            make_partition(&[3, 0, 1]),
            Err(PartitionError::NonPositivePart { index: 1, value: 0 })
        ));
        assert!(make_partition(&[-2]).is_err());
        assert!(Partition::from_parts(vec![0]).is_err());
    }

    #[test]
    fn stats_examples() {
        let s = parts(&[3, 2, 2, 1]).stats().unwrap();
        assert_eq!(
            s,
            PartitionStats { smallest: 1, smallest_mult: 1, second_smallest: Some(2), larger: 3, len: 4 }
        );
        let s = parts(&[2, 2]).stats().unwrap();
        assert_eq!(s.smallest, 2);
        assert_eq!(s.smallest_mult, 2);
        assert_eq!(s.second_smallest, None);
        assert_eq!(s.larger, 0);
        assert_eq!(s.len, 2);
        let s = parts(&[4, 1, 1]).stats().unwrap();
        assert_eq!((s.smallest, s.smallest_mult, s.second_smallest, s.larger, s.len), (1, 2, Some(4), 1, 3));
    }

    #[test]
    fn stats_on_empty_fails() {
        let err = Partition::empty().stats().unwrap_err();
        assert_eq!(err.to_string(), "stats undefined on empty partition");
    }

    #[test]
    fn enumerates_four() {
        let all: Vec<Vec<u32>> = enumerate_partitions(4).map(Partition::into_parts).collect();
        assert_eq!(all, vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]);
        let zero: Vec<Partition> = enumerate_partitions(0).collect();
        assert_eq!(zero, vec![Partition::empty()]);
        let distinct: Vec<Partition> = enumerate_filtered(ClassTag::Pd { weight: 4 }).collect();
        assert_eq!(distinct, vec![parts(&[4]), parts(&[3, 1])]);
    }

    // Independent count of p(n) by the classic recurrence on the largest part.
    fn p_table(n: usize) -> Vec<usize> {
        let mut ways = vec![0usize; n + 1];
        ways[0] = 1;
        for part in 1..=n {
            for m in part..=n {
                ways[m] += ways[m - part];
            }
        }
        ways
    }

    #[test]
    fn enumeration_is_complete_and_duplicate_free() {
        let p = p_table(30);
        for n in 0..=30u32 {
            let all: Vec<Partition> = enumerate_partitions(n).collect();
            let set: HashSet<&Partition> = all.iter().collect();
            assert_eq!(all.len(), p[n as usize], "n={n}");
            assert_eq!(set.len(), all.len());
            assert!(all.windows(2).all(|w| w[0].parts() > w[1].parts()), "order at n={n}");
            assert!(all.iter().all(|q| q.weight() == n));
        }
    }

    #[test]
    fn visitor_matches_iterator() {
        let mut seen = Vec::new();
        for_each_partition(12, |p| seen.push(p.to_vec()));
        let it: Vec<Vec<u32>> = enumerate_partitions(12).map(Partition::into_parts).collect();
        assert_eq!(seen, it);
    }

    #[test]
    fn base_count_examples() {
        assert_eq!(count_base(BaseKind::Pd, 5), 3);
        assert_eq!(count_base(BaseKind::Pde, 3), 0);
        assert_eq!(count_base(BaseKind::PdoSigned, 4), 1);
        assert_eq!(count_base(BaseKind::PdoSigned, 5), -1);
        for kind in BaseKind::ALL {
            assert_eq!(count_base(kind, 0), 1);
        }
    }

    #[test]
    fn base_counts_match_filtered_enumeration() {
        for n in 0..=30u32 {
            let all: Vec<Partition> = enumerate_partitions(n).collect();
            let distinct = all.iter().filter(|p| p.has_distinct_parts());
            let even = distinct.clone().filter(|p| p.parts().iter().all(|x| x % 2 == 0));
            let odd: Vec<&Partition> = distinct.clone().filter(|p| p.parts().iter().all(|x| x % 2 == 1)).collect();
            let signed: i64 = odd.iter().map(|p| if p.len() % 2 == 0 { 1 } else { -1 }).sum();
            assert_eq!(count_base(BaseKind::Pd, n), distinct.count() as i64);
            assert_eq!(count_base(BaseKind::Pde, n), even.count() as i64);
            assert_eq!(count_base(BaseKind::Pdo, n), odd.len() as i64);
            assert_eq!(count_base(BaseKind::PdoSigned, n), signed);
            if n % 2 == 1 {
                assert_eq!(count_base(BaseKind::Pde, n), 0);
            }
            assert!(signed.abs() <= odd.len() as i64);
        }
    }

    #[test]
    fn class_members_match_filtered_enumeration() {
        for w in 0..=22u32 {
            let mut tags = vec![ClassTag::Pd { weight: w }, ClassTag::Pde { weight: w }, ClassTag::Pdo { weight: w }];
            for k in 1..=4 {
                tags.extend([
                    ClassTag::SptD { k, weight: w },
                    ClassTag::SptDo { k, weight: w },
                    ClassTag::B0 { k, weight: w },
                    ClassTag::B1 { k, weight: w },
                ]);
            }
            for tag in tags {
                let brute: Vec<Partition> = enumerate_filtered(tag).collect();
                assert_eq!(tag.members(), brute, "{}", tag.label());
            }
        }
    }

    #[test]
    fn check_names_the_violation() {
        let err = ClassTag::B0 { k: 2, weight: 5 }.check(&parts(&[3, 1, 1])).unwrap_err();
        assert!(err.to_string().contains("same parity"), "{err}");
        let err = ClassTag::SptD { k: 2, weight: 4 }.check(&parts(&[1, 1, 1, 1])).unwrap_err();
        assert!(err.to_string().contains("occurs 4 times"), "{err}");
        let err = ClassTag::Pd { weight: 3 }.check(&parts(&[2, 1, 1])).unwrap_err();
        assert!(err.to_string().contains("weight"), "{err}");
        assert!(ClassTag::Pd { weight: 0 }.contains(&Partition::empty()));
        assert!(!ClassTag::SptD { k: 1, weight: 0 }.contains(&Partition::empty()));
    }

    #[test]
    fn display_is_compact() {
        assert_eq!(parts(&[1, 3, 2]).to_string(), "(3,2,1)");
        assert_eq!(Partition::empty().to_string(), "()");
    }
}
