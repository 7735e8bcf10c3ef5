use thiserror::Error;

/// Errors raised by the encoding, tableau and graph operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("duplicate value {value} at positions {first} and {second}")]
    DuplicateValue {
        value: f64,
        first: usize,
        second: usize,
    },
    #[error("value {value} at position {position} is not a finite number in [0, 1]")]
    OutOfRange { value: f64, position: usize },
    #[error("empty input")]
    Empty,
    #[error("malformed code: t[{position}] = {value} is outside 1..={position}")]
    MalformedCode { position: usize, value: usize },
    #[error("not a permutation of 0..{len}: {reason}")]
    NotAPermutation { len: usize, reason: String },
    #[error("input of length {len} is too short (need at least {min})")]
    TooShort { len: usize, min: usize },
    #[error("requested {m} coordinates from a code of length {n}")]
    BadRange { m: usize, n: usize },
    #[error("inconsistent path at level {level}")]
    InconsistentPath { level: usize },
    #[error("shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch { left: Vec<usize>, right: Vec<usize> },
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("n = {n} exceeds the exhaustive bound {max}")]
    TooLarge { n: usize, max: usize },
    #[error("vertices at levels {bottom} and {top} do not span a 2-interval")]
    BadLevels { bottom: usize, top: usize },
    #[error("vertex is not an intermediate of the interval")]
    NotIntermediate,
    #[error("2-interval has {count} intermediate vertices (at most 2 supported)")]
    TooManyIntermediates { count: usize },
    #[error("local rule produced a vertex that breaks the covering relation at level {level}")]
    RuleViolation { level: usize },
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
}

pub type Result<T> = std::result::Result<T, Error>;
