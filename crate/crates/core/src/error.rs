use thiserror::Error;

/// Errors raised while building point sets or oracles, or while answering queries.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("point {index} has a non-positive radius")]
    NonPositiveRadius { index: usize },
    #[error("point {index} has a non-finite coordinate or radius")]
    NonFiniteCoordinate { index: usize },
    #[error("point {index} has a value outside the supported magnitude range (|v| < 2^20)")]
    CoordinateOutOfRange { index: usize },
    #[error("dimension {0} is not supported (expected 1 or 2)")]
    UnsupportedDimension(usize),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operation requires a {expected}D point set, found {found}D")]
    WrongDimension { expected: usize, found: usize },
    #[error("vertex id {index} out of range for {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("SCC intervals [{0}, {1}] and [{2}, {3}] cross")]
    LaminarityViolation(i64, i64, i64, i64),
    #[error("radius ratio {psi} is not below sqrt(3)")]
    PsiTooLarge { psi: f64 },
    #[error("exact crossing arithmetic exceeded the 128-bit budget")]
    PrecisionOverflow,
    #[error("no balanced band separator exists for this disk set")]
    CannotSeparate,
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
