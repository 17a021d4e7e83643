use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("invalid metric: {0}")]
    InvalidMetric(String),

    #[error("not a permutation of 1..={len}: {reason}")]
    NotAPermutation { len: usize, reason: String },

    #[error("permutations are over different symbol sets (lengths {left} and {right})")]
    SymbolMismatch { left: usize, right: usize },

    #[error("super-symbol {symbol} has weight {left} on one side and {right} on the other")]
    WeightMismatch { symbol: u32, left: u64, right: u64 },

    #[error("invalid weighted sequence: {0}")]
    InvalidWeightedSeq(String),

    #[error("dimension {dim} exceeds the signed-sum cap of {cap}; use the brute-force solver")]
    DimensionOverCap { dim: usize, cap: usize },

    #[error("coordinate magnitude {max_abs} in dimension {dim} is too large for exact signed sums")]
    CoordinateOverflow { max_abs: u64, dim: usize },

    #[error("coordinates must be integers for this solver")]
    IntegerCoordinatesRequired,

    #[error("empty input")]
    Empty,

    #[error("need at least two points, got {0}")]
    TooFewPoints(usize),

    #[error("edit script inconsistent with its strings: {0}")]
    InconsistentScript(String),

    #[error("estimator broke its contract: {0}")]
    EstimatorContract(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("block separation not reached after {attempts} seeds (d = {d})")]
    CodecSeparation { d: usize, attempts: u32 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
