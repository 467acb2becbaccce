use thiserror::Error;

use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("entry {index} is {value}; parts must be positive")]
    NonPositivePart { index: usize, value: i64 },
    #[error("entry {index} ({value}) does not fit in a part")]
    PartTooLarge { index: usize, value: i64 },
    #[error("stats undefined on empty partition")]
    EmptyStats,
    #[error("{partition} is not in {class}: {reason}")]
    NotInClass { class: String, partition: Partition, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SptError {
    #[error("k must be at least 1")]
    ZeroK,
    #[error("n must be at least 1")]
    ZeroN,
    #[error("{name} = {value} exceeds the configured cap {cap}")]
    OverCap { name: &'static str, value: u32, cap: u32 },
    #[error("partition {partition} has weight {}, query asks for n = {n}", partition.weight())]
    WeightMismatch { partition: Partition, n: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("cannot shift by a negative power ({0})")]
    NegativeShift(i64),
    #[error("k must be at least 1")]
    ZeroK,
    #[error("Pochhammer {0} must be at least 1")]
    ZeroExponent(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("{rule} requires k >= {min}, got k = {k}")]
    BadK { rule: &'static str, k: u32, min: u32 },
    #[error("{partition} is outside the domain of {rule}: {reasons}")]
    OutsideDomain { rule: String, partition: Partition, reasons: String },
    #[error("{tag} is not a codomain class of {rule}")]
    TagNotInCodomain { rule: String, tag: String },
    #[error(transparent)]
    Membership(#[from] PartitionError),
    #[error("{rule} removed {actual} units from {partition}; the branch removes {expected}")]
    WeightBookkeeping { rule: String, partition: Partition, expected: u32, actual: i64 },
    #[error("weight parameter {value} exceeds the configured cap {cap}")]
    OverCap { value: u32, cap: u32 },
}
