use alloc::string::String;

/// Errors raised anywhere in the algebra, geometry and construction layers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live over different fields")]
    MixedFields,
    #[error("invalid modulus {0}: need an odd prime below 2^32")]
    InvalidModulus(u64),
    #[error("denominator vanishes modulo {0}")]
    DenominatorVanishes(u64),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("input is not homogeneous")]
    Inhomogeneous,
    #[error("element does not live in the ambient free module (rank {expected}, got {found})")]
    AmbientMismatch { expected: usize, found: usize },
    #[error("matrix is not homogeneous of degree zero: {0}")]
    DegreeMismatch(String),
    #[error("element is not in the submodule")]
    NotInSubmodule,
    #[error("dimension out of range: {0}")]
    Dimension(String),
    #[error("degenerate geometry: {0}")]
    Degenerate(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("inconsistent input: {0}")]
    Inconsistent(String),
    #[error("sampling exhausted after {0} attempts")]
    Exhausted(usize),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
