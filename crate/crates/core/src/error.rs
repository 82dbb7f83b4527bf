use thiserror::Error;

/// Errors raised by the algebraic routines and the problem-file front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring context mismatch: {left} vs {right} variables")]
    RingMismatch { left: usize, right: usize },
    #[error("monomial length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("division by zero")]
    ZeroDivision,
    #[error("leading term of the zero polynomial")]
    ZeroPolynomial,
    #[error("ideal is not maximal: {0}")]
    NotMaximal(String),
    #[error("the unit ideal has no {0}")]
    UnitIdeal(&'static str),
    #[error("maximal ideal is not associated to the ideal (excess dual space is zero)")]
    NotAssociated,
    #[error("inconsistent input: {0}")]
    Inconsistent(String),
    #[error("empty list of associated primes")]
    EmptyPrimeList,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Semantic(String),
}

pub type Result<T> = std::result::Result<T, Error>;
