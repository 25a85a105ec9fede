use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("invalid permutation word: {0}")]
    InvalidPermutation(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("position {pos} out of range 1..={max}")]
    PositionOutOfRange { pos: usize, max: usize },

    #[error("n = {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("permutation does not commute with the base permutation of the given cycle type")]
    NotInCentralizer,

    #[error("value {re} + {im}i failed the integrality check (tolerance {tol})")]
    NonIntegral { re: f64, im: f64, tol: f64 },

    #[error("multiplicity <{nu}, {lambda}> is not a nonnegative integer: {value}")]
    BadMultiplicity {
        nu: String,
        lambda: String,
        value: String,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
