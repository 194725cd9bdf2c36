use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),
    #[error("extension degree {0} is outside 1..=12")]
    DegreeOutOfRange(u32),
    #[error("field of order {0} exceeds the table limit")]
    FieldTooLarge(u64),
    #[error("division by zero")]
    DivisionByZero,

    #[error("{0} is not a prime power >= 2")]
    NotPrimePower(u64),
    #[error("n = {n} exceeds the supported cap n <= {cap}")]
    UnsupportedSize { n: u64, cap: u64 },
    #[error("point count mismatch: enumerated {found}, expected {expected}")]
    CountMismatch { found: u64, expected: u64 },

    #[error("series inverse requires a nonzero constant term")]
    NonUnitInverse,
    #[error("local expansion did not reach precision {0}")]
    PrecisionNotReached(usize),

    #[error("divisor touches a point outside P_inf, P_1..P_n")]
    UnsupportedSupport,
    #[error("P and Q must be distinct points")]
    SamePoints,

    #[error("m = {m} must satisfy 1 <= m <= {n}")]
    MOutOfRange { m: usize, n: u64 },
    #[error("k = {k} must satisfy 2 <= k <= {a}")]
    KOutOfRange { k: u64, a: u64 },
    #[error("alpha = {alpha} must satisfy alpha < {bound}")]
    AlphaOutOfRange { alpha: u64, bound: u64 },
    #[error("first coordinate of the tuple is not positive")]
    NonPositiveCoordinate,
    #[error("empty input")]
    EmptyInput,
    #[error("vectors have mismatched lengths")]
    LengthMismatch,
    #[error("box bound {bound} is below the required {required}")]
    BoxTooSmall { bound: u32, required: u32 },
    #[error("box bound {bound} exceeds 4g = {limit}")]
    BoxTooLarge { bound: u32, limit: u32 },

    #[error("support of G meets the evaluation points")]
    SupportOverlap,
    #[error("deg G must be positive")]
    DegenerateG,
    #[error("tuple {0:?} is not a pure gap")]
    NotPureGap(Vec<u32>),
}

pub type Result<T> = std::result::Result<T, Error>;
