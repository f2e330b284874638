use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("interval evaluation could not decide the comparison within {cap_bits} bits")]
    IndeterminatePrecision { cap_bits: u32 },

    #[error("Gram matrix is singular")]
    SingularGram,

    #[error("Gram matrix is not symmetric")]
    NotSymmetric,

    #[error("lattice is not even")]
    NotEven,

    #[error("zero vector has no divisor")]
    ZeroVector,

    #[error("vector is not primitive (content {0})")]
    NotPrimitive(u64),

    #[error("vector has length {found}, lattice has rank {rank}")]
    RankMismatch { rank: usize, found: usize },

    #[error("expected signature (2, n), found ({0}, {1})")]
    WrongSignature(usize, usize),

    #[error("index [L : <r> + K_r] = {0} is not 1 or 2")]
    IndexOutOfRange(u64),

    #[error("Jacobi cusp form dimension is not available for weight {0}")]
    UnsupportedWeight(i64),

    #[error("index d = {0} is not supported here")]
    UnsupportedIndex(u64),

    #[error("weight {0} is not even")]
    NonEvenWeight(u64),

    #[error("pi powers did not cancel (residual exponent {0})")]
    PiResidue(i64),

    #[error("w = {0} is out of range")]
    WOutOfRange(i64),

    #[error("variety of dimension {0} is below the toroidal compactification bound n >= 9")]
    DimensionTooSmall(u64),

    #[error("invalid series point: {0}")]
    InvalidPoint(String),

    #[error("cannot combine surds with radicands {0} and {1}")]
    MixedRadicals(u64, u64),

    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}
