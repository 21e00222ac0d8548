use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("q must lie in (0, 1), got {0}")]
    QOutOfRange(f64),
    #[error("rewriting exceeded the iteration cap of {0} steps")]
    IterationCap(usize),
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("unknown generator `{name}` in {algebra}")]
    UnknownGenerator { algebra: String, name: String },
    #[error("expected an element of {expected}, got one of {found}")]
    AlgebraMismatch { expected: String, found: String },
    #[error("{0} has no star structure")]
    StarUndefined(String),
    #[error("truncation must be at least 2, got {0}")]
    TruncationTooSmall(usize),
    #[error("materialized dimension {dim} exceeds the cap {cap}")]
    ResourceCap { dim: usize, cap: usize },
    #[error("operator is not a contraction: norm {0}")]
    NotContraction(f64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("entry is not holomorphic: {0}")]
    NonHolomorphic(String),
    #[error("family {family} takes {expected} phases, got {got}")]
    PhaseArity {
        family: String,
        expected: usize,
        got: usize,
    },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
