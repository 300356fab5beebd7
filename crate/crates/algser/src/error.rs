//! Crate-wide error type.
//!
//! Domain errors carry a stable machine-readable code (`Error::code`) which
//! the CLI prints verbatim, so scripts can dispatch on it.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("polynomial does not satisfy the implicit function theorem at the origin")]
    IftViolation,

    #[error("insufficient precision: need at least {needed}, got {got}")]
    InsufficientPrecision { needed: usize, got: usize },

    #[error("derivative order exceeds the separability bound; polynomial is inseparable or not a minimal polynomial of a power-series branch")]
    InseparableOrNotMinimal,

    #[error("operation requires a finite base field")]
    FieldNotFinite,

    #[error("enumeration budget exceeded: {candidates} candidates > budget {budget}")]
    BudgetExceeded { candidates: u128, budget: u128 },

    #[error("insufficient data: need at least two distinct q values with nonzero counts")]
    InsufficientData,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable error name, as emitted by the CLI.
    pub fn code(&self) -> &'static str {
        match self {
            Error::IftViolation => "ift-violation",
            Error::InsufficientPrecision { .. } => "insufficient-precision",
            Error::InseparableOrNotMinimal => "inseparable-or-not-minimal",
            Error::FieldNotFinite => "field-not-finite",
            Error::BudgetExceeded { .. } => "budget-exceeded",
            Error::InsufficientData => "insufficient-data",
            Error::NotPrime(_) => "not-prime",
            Error::Parse(_) => "parse-error",
        }
    }
}
