use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("NotAPrimePower: q = {0} is not a prime power >= 4")]
    NotAPrimePower(u64),

    #[error("CaseMismatch: {what} is only defined for odd q (got q = {q})")]
    CaseMismatch { what: &'static str, q: u64 },

    #[error("IntegralityViolation: {detail}")]
    IntegralityViolation { detail: String },

    #[error("NegativeMultiplicity: <f, {label}> = {value}")]
    NegativeMultiplicity { label: String, value: BigInt },

    #[error("MultiplicityOverflow: <f, {label}> = {value} does not fit in 64 bits")]
    MultiplicityOverflow { label: String, value: BigInt },

    #[error("ExponentCapExceeded: no power of {label} up to {tmax} covers Irr(G)")]
    ExponentCapExceeded { label: String, tmax: u32 },

    #[error("CapExceeded: q = {q} is above the explicit-group cap {cap}")]
    CapExceeded { q: u64, cap: u64 },

    #[error("MatchFailure: no explicit class matches {signature}")]
    MatchFailure { signature: String },

    #[error("invalid root-sum parameters: {0}")]
    InvalidSumSpec(String),

    #[error("invalid cyclotomic element: {0}")]
    InvalidCyclotomic(String),

    #[error("unknown character label `{0}`")]
    UnknownCharacter(String),

    #[error("unknown class label `{0}`")]
    UnknownClass(String),

    #[error("character {label} is not part of the table for q = {q}")]
    CharacterNotInTable { label: String, q: u64 },
}
