use thiserror::Error;

/// Errors raised by the algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("radicands differ: sqrt({0}) and sqrt({1}) cannot be mixed")]
    MixedRadicand(i64, i64),
    #[error("invalid radicand {0}: must be squarefree and different from 0 and 1")]
    InvalidRadicand(i64),
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("power substitution index {0} is not allowed here")]
    BadSubstitutionIndex(i64),
    #[error("coefficients must be rational for this operation")]
    NonRationalCoefficients,
    #[error("polynomial is not powered")]
    NotPowered,
    #[error("not a binomial: {0}")]
    NotBinomial(String),
    #[error("vector lengths differ ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("computation cancelled")]
    Cancelled,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
