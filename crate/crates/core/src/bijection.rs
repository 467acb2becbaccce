//! Explicit forward and inverse maps for the five bijections, and an
//! exhaustive round-trip verifier.
//!
//! Every rule is indexed by a *level*: the weight `n` for [`RuleId::Thm1a`]
//! and the parameter `t` for the lemma rules, whose classes have weights of
//! the form `2t + c`. Domains and codomains are disjoint unions of classes;
//! each side is a list of [`Slot`]s, and every map branch names the slot
//! its image lands in.
//!
//! | rule   | domain                                   | codomain                                             |
//! |--------|------------------------------------------|------------------------------------------------------|
//! | THM1A  | Spt k_d(n) ∪ Spt (k−1)_d(n)              | Spt (k−1)_d(n−k+1) ∪ PD(n−k+1)                       |
//! | L1     | B0(k+1, 2t+1) ∪ B1(k, 2t)                | B1(k, 2t−2k) ∪ PDE(2t−k)                             |
//! | L2     | B0(k+1, 2t) ∪ B1(k, 2t−1)                | B1(k, 2t−2k−1) ∪ PDE(2t−k−1) ∪ PDO(2t−2k−1)          |
//! | L3     | B0(k, 2t−1) ∪ B1(k+1, 2t)                | B0(k, 2t−2k−1) ∪ PDE(2t−k−1)                         |
//! | L4     | B0(k, 2t) ∪ B1(k+1, 2t+1)                | B0(k, 2t−2k) ∪ PDE(2t−k) ∪ PDO(2t−2k)                |
//!
//! Two conventions cover inputs the case lists leave implicit: a partition
//! with a single distinct part value (no ss) takes the `ss > s + 1` branch,
//! and the empty partition takes the "smallest part greater than 1" branch.
//! Both match what the forward maps produce.

use std::fmt;

use crate::error::BijectionError;
use crate::partition::{ClassTag, Parity, Partition, PartitionStats};
use crate::spt::Caps;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    Thm1a,
    L1,
    L2,
    L3,
    L4,
}

impl RuleId {
    pub const ALL: [RuleId; 5] = [RuleId::Thm1a, RuleId::L1, RuleId::L2, RuleId::L3, RuleId::L4];

    pub fn name(self) -> &'static str {
        match self {
            RuleId::Thm1a => "THM1A",
            RuleId::L1 => "L1",
            RuleId::L2 => "L2",
            RuleId::L3 => "L3",
            RuleId::L4 => "L4",
        }
    }

    pub fn min_k(self) -> u32 {
        match self {
            RuleId::Thm1a => 2,
            _ => 1,
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        RuleId::ALL.into_iter().find(|r| r.name().eq_ignore_ascii_case(s))
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BijectionRule {
    id: RuleId,
    k: u32,
}

impl fmt::Display for BijectionRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[k={}]", self.id, self.k)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum SlotClass {
    SptD(u32),
    B0(u32),
    B1(u32),
    Pd,
    Pde,
    Pdo,
}

/// One class of a domain or codomain union; its weight is `coef * level + offset`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Slot {
    class: SlotClass,
    coef: i64,
    offset: i64,
}

impl Slot {
    const fn new(class: SlotClass, coef: i64, offset: i64) -> Self {
        Self { class, coef, offset }
    }

    /// The class at `level`, or `None` when its weight would be negative
    /// (the class is then empty).
    pub fn tag_at(&self, level: u32) -> Option<ClassTag> {
        let w = self.coef * level as i64 + self.offset;
        let weight = u32::try_from(w).ok()?;
        Some(match self.class {
            SlotClass::SptD(k) => ClassTag::SptD { k, weight },
            SlotClass::B0(k) => ClassTag::B0 { k, weight },
            SlotClass::B1(k) => ClassTag::B1 { k, weight },
            SlotClass::Pd => ClassTag::Pd { weight },
            SlotClass::Pde => ClassTag::Pde { weight },
            SlotClass::Pdo => ClassTag::Pdo { weight },
        })
    }

    /// The level at which this slot is `tag`, if any level `>= 1` is.
    fn level_of(&self, tag: &ClassTag) -> Option<u32> {
        let matches = match (self.class, *tag) {
            (SlotClass::SptD(k), ClassTag::SptD { k: tk, .. })
            | (SlotClass::B0(k), ClassTag::B0 { k: tk, .. })
            | (SlotClass::B1(k), ClassTag::B1 { k: tk, .. }) => k == tk,
            (SlotClass::Pd, ClassTag::Pd { .. })
            | (SlotClass::Pde, ClassTag::Pde { .. })
            | (SlotClass::Pdo, ClassTag::Pdo { .. }) => true,
            _ => false,
        };
        if !matches {
            return None;
        }
        level_for_weight(self, tag.weight())
    }
}

/// Extra claims a branch makes about its image beyond class membership.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Post {
    LenParity(Parity),
    SmallestIs(u32),
    /// s(μ) > v, or μ empty.
    SmallestAbove(u32),
    /// s(μ) = smallest and ss(μ) = second.
    SmallestAndSecond { smallest: u32, second: u32 },
    /// s(μ) = smallest and ss(μ) > above (or absent).
    SmallestAndSecondAbove { smallest: u32, above: u32 },
}

impl Post {
    fn check(self, mu: &Partition) -> Result<(), String> {
        let st = mu.stats().ok();
        let s = st.map(|x| x.smallest);
        let ss = st.and_then(|x| x.second_smallest);
        let ok = match self {
            Post::LenParity(p) => Parity::of(mu.len()) == p,
            Post::SmallestIs(v) => s == Some(v),
            Post::SmallestAbove(v) => s.is_none_or(|s| s > v),
            Post::SmallestAndSecond { smallest, second } => s == Some(smallest) && ss == Some(second),
            Post::SmallestAndSecondAbove { smallest, above } => s == Some(smallest) && ss.is_none_or(|x| x > above),
        };
        if ok {
            Ok(())
        } else {
            Err(format!("{mu} fails {self:?}"))
        }
    }
}

/// What one branch of a map produces.
struct Step {
    parts: Vec<u32>,
    slot: usize,
    /// Units removed by a forward branch, or added by an inverse branch.
    units: u32,
    case: &'static str,
    post: Post,
}

/// A bijection image together with the class it was claimed to land in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MappedPartition {
    image: Partition,
    tag: ClassTag,
    case: &'static str,
}

impl MappedPartition {
    /// Fails unless `image` is a member of `tag`.
    pub fn new(image: Partition, tag: ClassTag) -> Result<Self, BijectionError> {
        tag.check(&image)?;
        Ok(Self { image, tag, case: "" })
    }

    pub fn image(&self) -> &Partition {
        &self.image
    }

    pub fn tag(&self) -> ClassTag {
        self.tag
    }

    /// Which branch of the map produced this image.
    pub fn case(&self) -> &'static str {
        self.case
    }

    pub fn into_parts(self) -> (Partition, ClassTag) {
        (self.image, self.tag)
    }
}

// Part-list edits. The copies of the smallest part sit at the end of the
// list, so editing the trailing copies keeps the list sorted except where a
// part drops to zero or a part is appended; `rebuild` handles both.

fn rebuild(mut parts: Vec<u32>) -> Vec<u32> {
    parts.retain(|&p| p > 0);
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

/// Subtracts `by` from `copies` copies of the smallest part.
fn shrink_smallest(p: &Partition, copies: u32, by: u32) -> Vec<u32> {
    let mut parts = p.parts().to_vec();
    let len = parts.len();
    for part in &mut parts[len - copies as usize..] {
        *part -= by;
    }
    rebuild(parts)
}

/// Subtracts 2 from `k` copies of the smallest part and 1 from one more copy.
fn shrink_smallest_split(p: &Partition, k: u32) -> Vec<u32> {
    let mut parts = p.parts().to_vec();
    let len = parts.len();
    for part in &mut parts[len - k as usize..] {
        *part -= 2;
    }
    parts[len - k as usize - 1] -= 1;
    rebuild(parts)
}

/// Adds `by` to `copies` copies of the smallest part.
fn grow_smallest(p: &Partition, copies: u32, by: u32) -> Vec<u32> {
    let mut parts = p.parts().to_vec();
    let len = parts.len();
    for part in &mut parts[len - copies as usize..] {
        *part += by;
    }
    rebuild(parts)
}

/// Adds 2 to the `k` copies of the smallest part and 1 to the second smallest part.
fn grow_smallest_and_second(p: &Partition, k: u32) -> Vec<u32> {
    let mut parts = p.parts().to_vec();
    let len = parts.len();
    for part in &mut parts[len - k as usize..] {
        *part += 2;
    }
    parts[len - k as usize - 1] += 1;
    rebuild(parts)
}

fn append_parts(p: &Partition, value: u32, count: u32) -> Vec<u32> {
    let mut parts = p.parts().to_vec();
    parts.extend(std::iter::repeat_n(value, count as usize));
    rebuild(parts)
}

/// Adds 1 to the smallest part, then appends `count` copies of `value`.
fn bump_smallest_then_append(p: &Partition, value: u32, count: u32) -> Vec<u32> {
    let mut parts = p.parts().to_vec();
    if let Some(last) = parts.last_mut() {
        *last += 1;
    }
    parts.extend(std::iter::repeat_n(value, count as usize));
    rebuild(parts)
}

/// ss(μ) = s(μ) + 1.
fn second_is_next(st: &PartitionStats) -> bool {
    st.second_smallest == Some(st.smallest + 1)
}

impl BijectionRule {
    pub fn new(id: RuleId, k: u32) -> Result<Self, BijectionError> {
        if k < id.min_k() {
            return Err(BijectionError::BadK { rule: id.name(), k, min: id.min_k() });
        }
        Ok(Self { id, k })
    }

    pub fn id(&self) -> RuleId {
        self.id
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn domain_slots(&self) -> Vec<Slot> {
        use SlotClass::*;
        let k = self.k;
        match self.id {
            RuleId::Thm1a => vec![Slot::new(SptD(k), 1, 0), Slot::new(SptD(k - 1), 1, 0)],
            RuleId::L1 => vec![Slot::new(B0(k + 1), 2, 1), Slot::new(B1(k), 2, 0)],
            RuleId::L2 => vec![Slot::new(B0(k + 1), 2, 0), Slot::new(B1(k), 2, -1)],
            RuleId::L3 => vec![Slot::new(B0(k), 2, -1), Slot::new(B1(k + 1), 2, 0)],
            RuleId::L4 => vec![Slot::new(B0(k), 2, 0), Slot::new(B1(k + 1), 2, 1)],
        }
    }

    pub fn codomain_slots(&self) -> Vec<Slot> {
        use SlotClass::*;
        let k = self.k;
        let ki = k as i64;
        match self.id {
            RuleId::Thm1a => vec![Slot::new(SptD(k - 1), 1, 1 - ki), Slot::new(Pd, 1, 1 - ki)],
            RuleId::L1 => vec![Slot::new(B1(k), 2, -2 * ki), Slot::new(Pde, 2, -ki)],
            RuleId::L2 => vec![
                Slot::new(B1(k), 2, -2 * ki - 1),
                Slot::new(Pde, 2, -ki - 1),
                Slot::new(Pdo, 2, -2 * ki - 1),
            ],
            RuleId::L3 => vec![Slot::new(B0(k), 2, -2 * ki - 1), Slot::new(Pde, 2, -ki - 1)],
            RuleId::L4 => vec![Slot::new(B0(k), 2, -2 * ki), Slot::new(Pde, 2, -ki), Slot::new(Pdo, 2, -2 * ki)],
        }
    }

    /// Non-empty-weight domain classes at `level`.
    pub fn domain(&self, level: u32) -> Vec<ClassTag> {
        self.domain_slots().iter().filter_map(|s| s.tag_at(level)).collect()
    }

    /// Non-empty-weight codomain classes at `level`.
    pub fn codomain(&self, level: u32) -> Vec<ClassTag> {
        self.codomain_slots().iter().filter_map(|s| s.tag_at(level)).collect()
    }

    /// Largest weight among the domain classes at `level`.
    pub fn max_weight(&self, level: u32) -> u32 {
        self.domain(level).iter().map(ClassTag::weight).max().unwrap_or(0)
    }

    /// Finds the slot of `side` that contains `p`, returning it with its level.
    fn locate(&self, p: &Partition, side: &[Slot]) -> Result<(usize, u32), BijectionError> {
        let mut reasons = Vec::new();
        for (i, slot) in side.iter().enumerate() {
            let Some(level) = level_for_weight(slot, p.weight()) else {
                continue;
            };
            let tag = slot.tag_at(level).expect("weight is non-negative");
            match tag.check(p) {
                Ok(()) => return Ok((i, level)),
                Err(e) => reasons.push(e.to_string()),
            }
        }
        if reasons.is_empty() {
            reasons.push(format!("no {} class has weight {}", self, p.weight()));
        }
        Err(BijectionError::OutsideDomain { rule: self.to_string(), partition: p.clone(), reasons: reasons.join("; ") })
    }

    pub fn forward(&self, lam: &Partition) -> Result<MappedPartition, BijectionError> {
        let (slot, level) = self.locate(lam, &self.domain_slots())?;
        let st = lam.stats()?;
        let step = self.forward_step(lam, &st, slot);
        self.finish(lam, step, level, &self.codomain_slots(), true)
    }

    pub fn inverse(&self, mu: &Partition, mu_tag: &ClassTag) -> Result<Partition, BijectionError> {
        self.inverse_tagged(mu, mu_tag).map(|m| m.image)
    }

    /// As [`inverse`](Self::inverse), also returning the domain class of the result.
    pub fn inverse_tagged(&self, mu: &Partition, mu_tag: &ClassTag) -> Result<MappedPartition, BijectionError> {
        let codomain = self.codomain_slots();
        let (slot, level) = codomain
            .iter()
            .enumerate()
            .find_map(|(i, s)| s.level_of(mu_tag).map(|level| (i, level)))
            .ok_or_else(|| BijectionError::TagNotInCodomain { rule: self.to_string(), tag: mu_tag.label() })?;
        mu_tag.check(mu)?;
        let step = self.inverse_step(mu, slot);
        self.finish(mu, step, level, &self.domain_slots(), false)
    }

    fn finish(
        &self,
        from: &Partition,
        step: Step,
        level: u32,
        side: &[Slot],
        removing: bool,
    ) -> Result<MappedPartition, BijectionError> {
        let image = Partition::from_sorted_unchecked(step.parts);
        let change = if removing {
            from.weight() as i64 - image.weight() as i64
        } else {
            image.weight() as i64 - from.weight() as i64
        };
        if change != step.units as i64 {
            return Err(BijectionError::WeightBookkeeping {
                rule: format!("{self} ({})", step.case),
                partition: from.clone(),
                expected: step.units,
                actual: change,
            });
        }
        let tag = side[step.slot].tag_at(level).ok_or_else(|| BijectionError::OutsideDomain {
            rule: self.to_string(),
            partition: image.clone(),
            reasons: format!("target class of branch {} has negative weight", step.case),
        })?;
        let mut mapped = MappedPartition::new(image, tag)?;
        step.post.check(&mapped.image).map_err(|reason| BijectionError::OutsideDomain {
            rule: format!("{self} ({})", step.case),
            partition: from.clone(),
            reasons: reason,
        })?;
        mapped.case = step.case;
        Ok(mapped)
    }

    fn forward_step(&self, lam: &Partition, st: &PartitionStats, slot: usize) -> Step {
        let k = self.k;
        let s = st.smallest;
        let step = |parts, slot, units, case, post| Step { parts, slot, units, case, post };
        match (self.id, slot) {
            // λ ∈ Spt k_d(n): take 1 from k−1 of the k copies of s.
            (RuleId::Thm1a, 0) => {
                let parts = shrink_smallest(lam, k - 1, 1);
                if s == 1 {
                    step(parts, 1, k - 1, "Spt k_d, s = 1", Post::SmallestIs(1))
                } else {
                    let post = Post::SmallestAndSecond { smallest: s - 1, second: s };
                    step(parts, 0, k - 1, "Spt k_d, s > 1", post)
                }
            }
            // λ ∈ Spt (k−1)_d(n): take 1 from each of the k−1 copies of s.
            (RuleId::Thm1a, _) => {
                let parts = shrink_smallest(lam, k - 1, 1);
                if s == 1 {
                    step(parts, 1, k - 1, "Spt (k-1)_d, s = 1", Post::SmallestAbove(1))
                } else {
                    let post = Post::SmallestAndSecondAbove { smallest: s - 1, above: s };
                    step(parts, 0, k - 1, "Spt (k-1)_d, s > 1", post)
                }
            }

            // λ ∈ B0(k+1, 2t+1)
            (RuleId::L1, 0) => {
                if s == 1 {
                    let parts = shrink_smallest(lam, k + 1, 1);
                    step(parts, 1, k + 1, "B0(k+1), s = 1", Post::LenParity(Parity::Even))
                } else {
                    let parts = shrink_smallest_split(lam, k);
                    let post = Post::SmallestAndSecond { smallest: s - 2, second: s - 1 };
                    step(parts, 0, 2 * k + 1, "B0(k+1), s > 1", post)
                }
            }
            // λ ∈ B1(k, 2t)
            (RuleId::L1, _) => {
                if s == 1 {
                    let parts = shrink_smallest(lam, k, 1);
                    step(parts, 1, k, "B1(k), s = 1", Post::LenParity(Parity::Odd))
                } else {
                    let parts = shrink_smallest(lam, k, 2);
                    let post = Post::SmallestAndSecondAbove { smallest: s - 2, above: s };
                    step(parts, 0, 2 * k, "B1(k), s > 1", post)
                }
            }

            // λ ∈ B0(k+1, 2t)
            (RuleId::L2, 0) => {
                if s == 1 {
                    let parts = shrink_smallest(lam, k + 1, 1);
                    step(parts, 1, k + 1, "B0(k+1), s = 1", Post::LenParity(Parity::Even))
                } else if s == 2 {
                    let parts = shrink_smallest_split(lam, k);
                    step(parts, 2, 2 * k + 1, "B0(k+1), s = 2", Post::SmallestIs(1))
                } else {
                    let parts = shrink_smallest_split(lam, k);
                    let post = Post::SmallestAndSecond { smallest: s - 2, second: s - 1 };
                    step(parts, 0, 2 * k + 1, "B0(k+1), s >= 3", post)
                }
            }
            // λ ∈ B1(k, 2t−1)
            (RuleId::L2, _) => {
                if s == 1 {
                    let parts = shrink_smallest(lam, k, 1);
                    step(parts, 1, k, "B1(k), s = 1", Post::LenParity(Parity::Odd))
                } else if s == 2 {
                    let parts = shrink_smallest(lam, k, 2);
                    step(parts, 2, 2 * k, "B1(k), s = 2", Post::SmallestAbove(2))
                } else {
                    let parts = shrink_smallest(lam, k, 2);
                    let post = Post::SmallestAndSecondAbove { smallest: s - 2, above: s };
                    step(parts, 0, 2 * k, "B1(k), s >= 3", post)
                }
            }

            // λ ∈ B0(k, 2t−1)
            (RuleId::L3, 0) => {
                if s == 1 {
                    let parts = shrink_smallest(lam, k, 1);
                    step(parts, 1, k, "B0(k), s = 1", Post::LenParity(Parity::Even))
                } else {
                    let parts = shrink_smallest(lam, k, 2);
                    let post = Post::SmallestAndSecondAbove { smallest: s - 2, above: s };
                    step(parts, 0, 2 * k, "B0(k), s > 1", post)
                }
            }
            // λ ∈ B1(k+1, 2t)
            (RuleId::L3, _) => {
                if s == 1 {
                    let parts = shrink_smallest(lam, k + 1, 1);
                    step(parts, 1, k + 1, "B1(k+1), s = 1", Post::LenParity(Parity::Odd))
                } else {
                    let parts = shrink_smallest_split(lam, k);
                    let post = Post::SmallestAndSecond { smallest: s - 2, second: s - 1 };
                    step(parts, 0, 2 * k + 1, "B1(k+1), s > 1", post)
                }
            }

            // λ ∈ B0(k, 2t)
            (RuleId::L4, 0) => {
                if s == 1 {
                    let parts = shrink_smallest(lam, k, 1);
                    step(parts, 1, k, "B0(k), s = 1", Post::LenParity(Parity::Even))
                } else if s == 2 {
                    let parts = shrink_smallest(lam, k, 2);
                    step(parts, 2, 2 * k, "B0(k), s = 2", Post::SmallestAbove(2))
                } else {
                    let parts = shrink_smallest(lam, k, 2);
                    let post = Post::SmallestAndSecondAbove { smallest: s - 2, above: s };
                    step(parts, 0, 2 * k, "B0(k), s >= 3", post)
                }
            }
            // λ ∈ B1(k+1, 2t+1)
            (RuleId::L4, _) => {
                if s == 1 {
                    let parts = shrink_smallest(lam, k + 1, 1);
                    step(parts, 1, k + 1, "B1(k+1), s = 1", Post::LenParity(Parity::Odd))
                } else if s == 2 {
                    let parts = shrink_smallest_split(lam, k);
                    step(parts, 2, 2 * k + 1, "B1(k+1), s = 2", Post::SmallestIs(1))
                } else {
                    let parts = shrink_smallest_split(lam, k);
                    let post = Post::SmallestAndSecond { smallest: s - 2, second: s - 1 };
                    step(parts, 0, 2 * k + 1, "B1(k+1), s >= 3", post)
                }
            }
        }
    }

    fn inverse_step(&self, mu: &Partition, slot: usize) -> Step {
        let k = self.k;
        let st = mu.stats().ok();
        let s = st.map(|x| x.smallest);
        let len_parity = Parity::of(mu.len());
        let step = |parts, slot, units, case, post| Step { parts, slot, units, case, post };
        // Growing the smallest part only happens on slot 0, whose classes are never empty.
        let grown = |st: Option<PartitionStats>| st.expect("Spt-type classes exclude the empty partition");
        match (self.id, slot) {
            // μ ∈ Spt (k−1)_d(n−k+1): add 1 to each of the k−1 copies of s.
            (RuleId::Thm1a, 0) => {
                let st = grown(st);
                let parts = grow_smallest(mu, k - 1, 1);
                let post = Post::SmallestIs(st.smallest + 1);
                if second_is_next(&st) {
                    step(parts, 0, k - 1, "Spt (k-1)_d, ss = s + 1", post)
                } else {
                    step(parts, 1, k - 1, "Spt (k-1)_d, ss > s + 1", post)
                }
            }
            // μ ∈ PD(n−k+1): append k−1 ones.
            (RuleId::Thm1a, _) => {
                let parts = append_parts(mu, 1, k - 1);
                if s == Some(1) {
                    step(parts, 0, k - 1, "PD, s = 1", Post::SmallestIs(1))
                } else {
                    step(parts, 1, k - 1, "PD, s > 1", Post::SmallestIs(1))
                }
            }

            // L1: μ ∈ B1(k, 2t−2k)
            (RuleId::L1, 0) => {
                let st = grown(st);
                let post = Post::SmallestIs(st.smallest + 2);
                if second_is_next(&st) {
                    step(grow_smallest_and_second(mu, k), 0, 2 * k + 1, "B1(k), ss = s + 1", post)
                } else {
                    step(grow_smallest(mu, k, 2), 1, 2 * k, "B1(k), ss > s + 1", post)
                }
            }
            // L1: μ ∈ PDE(2t−k)
            (RuleId::L1, _) => match len_parity {
                Parity::Odd => step(append_parts(mu, 1, k), 1, k, "PDE, odd length", Post::SmallestIs(1)),
                Parity::Even => step(append_parts(mu, 1, k + 1), 0, k + 1, "PDE, even length", Post::SmallestIs(1)),
            },

            // L2: μ ∈ B1(k, 2t−2k−1)
            (RuleId::L2, 0) => {
                let st = grown(st);
                let post = Post::SmallestIs(st.smallest + 2);
                if second_is_next(&st) {
                    step(grow_smallest_and_second(mu, k), 0, 2 * k + 1, "B1(k), ss = s + 1", post)
                } else {
                    step(grow_smallest(mu, k, 2), 1, 2 * k, "B1(k), ss > s + 1", post)
                }
            }
            // L2: μ ∈ PDE(2t−k−1)
            (RuleId::L2, 1) => match len_parity {
                Parity::Even => step(append_parts(mu, 1, k + 1), 0, k + 1, "PDE, even length", Post::SmallestIs(1)),
                Parity::Odd => step(append_parts(mu, 1, k), 1, k, "PDE, odd length", Post::SmallestIs(1)),
            },
            // L2: μ ∈ PDO(2t−2k−1)
            (RuleId::L2, _) => {
                if s == Some(1) {
                    let parts = bump_smallest_then_append(mu, 2, k);
                    step(parts, 0, 2 * k + 1, "PDO, s = 1", Post::SmallestIs(2))
                } else {
                    step(append_parts(mu, 2, k), 1, 2 * k, "PDO, s > 1", Post::SmallestIs(2))
                }
            }

            // L3: μ ∈ B0(k, 2t−2k−1)
            (RuleId::L3, 0) => {
                let st = grown(st);
                let post = Post::SmallestIs(st.smallest + 2);
                if second_is_next(&st) {
                    step(grow_smallest_and_second(mu, k), 1, 2 * k + 1, "B0(k), ss = s + 1", post)
                } else {
                    step(grow_smallest(mu, k, 2), 0, 2 * k, "B0(k), ss > s + 1", post)
                }
            }
            // L3: μ ∈ PDE(2t−k−1)
            (RuleId::L3, _) => match len_parity {
                Parity::Even => step(append_parts(mu, 1, k), 0, k, "PDE, even length", Post::SmallestIs(1)),
                Parity::Odd => step(append_parts(mu, 1, k + 1), 1, k + 1, "PDE, odd length", Post::SmallestIs(1)),
            },

            // L4: μ ∈ B0(k, 2t−2k)
            (RuleId::L4, 0) => {
                let st = grown(st);
                let post = Post::SmallestIs(st.smallest + 2);
                if second_is_next(&st) {
                    step(grow_smallest_and_second(mu, k), 1, 2 * k + 1, "B0(k), ss = s + 1", post)
                } else {
                    step(grow_smallest(mu, k, 2), 0, 2 * k, "B0(k), ss > s + 1", post)
                }
            }
            // L4: μ ∈ PDE(2t−k)
            (RuleId::L4, 1) => match len_parity {
                Parity::Even => step(append_parts(mu, 1, k), 0, k, "PDE, even length", Post::SmallestIs(1)),
                Parity::Odd => step(append_parts(mu, 1, k + 1), 1, k + 1, "PDE, odd length", Post::SmallestIs(1)),
            },
            // L4: μ ∈ PDO(2t−2k)
            (RuleId::L4, _) => {
                if s == Some(1) {
                    let parts = bump_smallest_then_append(mu, 2, k);
                    step(parts, 1, 2 * k + 1, "PDO, s = 1", Post::SmallestIs(2))
                } else {
                    step(append_parts(mu, 2, k), 0, 2 * k, "PDO, s > 1", Post::SmallestIs(2))
                }
            }
        }
    }

    /// Runs [`verify_rule`] with explicit caps.
    pub fn verify(&self, level: u32, caps: Caps) -> Result<BijectionReport, BijectionError> {
        let max_weight = self.max_weight(level);
        if max_weight > caps.n_max {
            return Err(BijectionError::OverCap { value: max_weight, cap: caps.n_max });
        }
        let domain = self.domain(level);
        let codomain = self.codomain(level);
        let mut report = BijectionReport {
            rule: *self,
            n: level,
            domain_size: 0,
            codomain_size: 0,
            roundtrip_failures: Vec::new(),
            codomain_violations: Vec::new(),
            domain_violations: Vec::new(),
        };

        for tag in &domain {
            for lam in tag.members() {
                report.domain_size += 1;
                match self.forward(&lam) {
                    Ok(m) if codomain.contains(&m.tag) => {
                        if self.inverse(&m.image, &m.tag).as_ref() != Ok(&lam) {
                            report.roundtrip_failures.push(lam);
                        }
                    }
                    _ => report.codomain_violations.push(lam),
                }
            }
        }

        for tag in &codomain {
            for mu in tag.members() {
                report.codomain_size += 1;
                match self.inverse_tagged(&mu, tag) {
                    Ok(m) if domain.contains(&m.tag) => match self.forward(&m.image) {
                        Ok(back) if back.image == mu && back.tag == *tag => {}
                        _ => report.roundtrip_failures.push(mu),
                    },
                    _ => report.domain_violations.push(mu),
                }
            }
        }
        Ok(report)
    }
}

fn level_for_weight(slot: &Slot, weight: u32) -> Option<u32> {
    let rest = weight as i64 - slot.offset;
    if rest % slot.coef != 0 || rest / slot.coef < 1 {
        return None;
    }
    u32::try_from(rest / slot.coef).ok()
}

/// Exhaustive check of `rule` at `level` (weight `n` for THM1A, `t` for the
/// lemma rules) under the default caps.
pub fn verify_rule(rule: &BijectionRule, level: u32) -> Result<BijectionReport, BijectionError> {
    rule.verify(level, Caps::DEFAULT)
}

/// Outcome of [`verify_rule`] for one rule and level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionReport {
    pub rule: BijectionRule,
    /// The level checked: weight `n` for THM1A, `t` for the lemma rules.
    pub n: u32,
    pub domain_size: usize,
    pub codomain_size: usize,
    /// Elements (from either side) that do not come back to themselves.
    pub roundtrip_failures: Vec<Partition>,
    /// Domain elements whose forward image is rejected or lands outside the codomain.
    pub codomain_violations: Vec<Partition>,
    /// Codomain elements whose inverse image is rejected or lands outside the domain.
    pub domain_violations: Vec<Partition>,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.domain_size == self.codomain_size
            && self.roundtrip_failures.is_empty()
            && self.codomain_violations.is_empty()
            && self.domain_violations.is_empty()
    }

    /// Number of individual problems found: size mismatch plus listed failures.
    pub fn defects(&self) -> usize {
        self.domain_size.abs_diff(self.codomain_size)
            + self.roundtrip_failures.len()
            + self.codomain_violations.len()
            + self.domain_violations.len()
    }
}
