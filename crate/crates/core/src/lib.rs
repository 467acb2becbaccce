//! Partitions whose smallest part repeats exactly k times.
//!
//! - [`partition`]: canonical partitions, statistics, enumeration, base counts.
//! - [`spt`]: membership and brute-force counts for Spt k_d(n) and Spt k_do(n).
//! - [`bijection`]: the five explicit bijections with an exhaustive verifier.
//! - [`qseries`]: exact truncated power series, Pochhammer products, closed forms.

pub mod bijection;
pub mod error;
pub mod partition;
pub mod qseries;
pub mod spt;

pub use bijection::{verify_rule, BijectionReport, BijectionRule, MappedPartition, RuleId};
pub use error::{BijectionError, PartitionError, SeriesError, SptError};
pub use partition::{
    classify, count_base, enumerate_partitions, make_partition, BaseKind, ClassTag, Parity, Partition,
    PartitionStats,
};
pub use qseries::{genfun, pochhammer, poly_family, theorem_rhs, GenFlavor, PochSign, PochSpec, PolyFamily, Series, Theorem};
pub use spt::{count, is_member, Caps, CountBundle, Family, SptQuery};
