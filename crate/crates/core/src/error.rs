use alloc::string::String;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("sample too small: need at least {need} values, got {got}")]
    SampleTooSmall { need: usize, got: usize },

    #[error("value {value} at row {row}, column `{column}` violates its {kind} support")]
    SupportViolation {
        column: String,
        row: usize,
        value: f64,
        kind: String,
    },

    #[error("column `{0}` not found")]
    UnknownColumn(String),

    #[error("schema requires exactly one target column, found {0}")]
    TargetCount(usize),

    #[error("dataset has no rows")]
    EmptyDataset,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("k = {k} must be at least 1 and smaller than the sample size n = {n}")]
    InvalidK { k: usize, n: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("weights must be non-negative with a positive sum")]
    InvalidWeights,

    #[error("requested draw count must be positive")]
    EmptyDraw,

    #[error("kernel {kernel} is incompatible with variable kind {variable}")]
    KernelMismatch { kernel: String, variable: String },

    #[error("center x = {x} lies outside the kernel support")]
    CenterOutsideSupport { x: f64 },

    #[error("mixture components m = {m} must satisfy 1 <= m < n = {n}")]
    InvalidComponentCount { m: usize, n: usize },

    #[error("unknown target generation method id {0} (valid: 0..=5)")]
    InvalidTargetMethod(u8),

    #[error("{0}")]
    Protocol(String),
}

pub type Result<T> = core::result::Result<T, Error>;
