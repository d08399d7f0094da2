use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid modulus {0}")]
    InvalidModulus(u64),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("divisor is not normed (leading coefficient must be 1)")]
    NotNormed,
    #[error("not a null-polynomial")]
    NotNull,
    #[error("monomial is not reducible modulo {0}")]
    NotReducible(u64),
    #[error("not an integer: negative exponent for prime {0}")]
    NotAnInteger(u64),
    #[error("value does not fit in 64 bits")]
    Overflow,
    #[error("brute-force guard exceeded: {0}")]
    GuardExceeded(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
