use thiserror::Error;

use crate::poly_core::ParseError;

/// Everything that can go wrong inside the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gcd of zero polynomials undefined")]
    ZeroGcd,

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("division by the zero polynomial")]
    PolynomialDivisionByZero,

    #[error("division by zero")]
    DivisionByZero,

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("even degree required (got degree {0})")]
    EvenDegreeRequired(usize),

    #[error("odd degree required (got degree {0})")]
    OddDegreeRequired(usize),

    #[error("degree {degree} too small, need at least {minimum}")]
    DegreeTooSmall { degree: usize, minimum: usize },

    #[error("nonpositive coefficient at index {0}")]
    NonPositiveCoefficient(usize),

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("ratio must be positive")]
    NonPositiveRatio,

    #[error("n must be a positive integer")]
    InvalidN,

    #[error("exhaustive minor check capped at 7 (matrix is {0}x{0})")]
    MinorCapExceeded(usize),

    #[error("positivity on all of ℝ impossible for odd degree")]
    OddDegreePositivity,

    #[error("leading coefficient must be positive")]
    NonPositiveLeadingCoefficient,

    #[error("epsilon {value} outside the open interval ({low}, 1)")]
    EpsilonOutOfRange { value: String, low: i32 },

    #[error("precision of {0} digits is below the minimum of 30")]
    PrecisionTooLow(u32),

    #[error("algebraic values live in different fields (n = {0} vs n = {1})")]
    FieldMismatch(usize, usize),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
