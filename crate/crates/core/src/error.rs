use alloc::string::String;

use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid cyclic factor {0}: every factor must be at least 2")]
    InvalidFactor(u64),
    #[error("{a} is not a unit modulo {m}")]
    NotAUnit { a: u64, m: u64 },
    #[error("{0} is not a prime")]
    InvalidPrime(u64),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("automorphism group too large to enumerate: predicted order {predicted} exceeds ceiling {ceiling}")]
    TooLarge { predicted: BigUint, ceiling: u64 },
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("invalid subgroup chain: {0}")]
    InvalidChain(String),
    #[error("no element of order {0} exists in the group")]
    NoSubgroup(u64),
    #[error("prime {p} ramifies in the cyclotomic field of conductor {m}")]
    Ramified { p: u64, m: u64 },
    #[error("element does not belong to the group: {0}")]
    NotAnElement(String),
    #[error("wrong field shape: {0}")]
    WrongShape(String),
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
