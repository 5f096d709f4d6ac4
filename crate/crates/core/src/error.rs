//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("characteristic {0} is not supported: prime fields need p >= 5")]
    UnsupportedCharacteristic(u64),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("subspace not contained in target: {0}")]
    NotContained(String),

    #[error("span is not a graded subspace: {0}")]
    NotGraded(String),

    #[error("not a graded ideal: {0}")]
    NotAnIdeal(String),

    #[error("not a graded complement: {0}")]
    NotAComplement(String),

    #[error("algebra failed validation: {0}")]
    InvalidAlgebra(String),

    #[error("factor set failed validation: {0}")]
    InvalidFactorSet(String),

    #[error("map is not graded: {0}")]
    NotGradedMap(String),

    #[error("map is singular: {0}")]
    Singular(String),

    #[error("incompatible inputs: {0}")]
    Incompatible(String),

    #[error("nonzero compatibility residual: {0}")]
    NonzeroResidual(String),

    #[error("invalid representative choice: {0}")]
    InvalidRepresentativeChoice(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown catalog entry: {0}")]
    UnknownCatalogEntry(String),

    #[error("internal defect: {0}")]
    Defect(String),
}

pub type Result<T> = std::result::Result<T, Error>;
