use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid generator `{0}`")]
    InvalidGenerator(String),
    #[error("polynomial is not divisible by {k} over the integers")]
    NotDivisible { k: u64 },
    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("series has a nonzero constant term")]
    NonzeroConstantTerm,
    #[error("series constant term is not 1")]
    ConstantTermNotOne,
    #[error("series is not of the form z + O(z^2)")]
    NotNormalized,
    #[error("non-integral coefficient in degree {n}: {detail}")]
    IntegralityViolation { n: u32, detail: String },
    #[error("value does not fit the chosen scalar type")]
    ScalarOverflow,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
