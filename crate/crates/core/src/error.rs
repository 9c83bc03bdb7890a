use thiserror::Error;

use crate::field::FieldSpec;
use crate::report::Report;

#[derive(Debug, Error)]
pub enum Error {
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: FieldSpec, found: FieldSpec },
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error("invalid scalar {0:?}")]
    ParseScalar(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid complex: {0}")]
    InvalidComplex(Report),
    #[error("unknown object {0:?}")]
    UnknownObject(String),
    #[error("unknown basis element {0:?}")]
    UnknownBasis(String),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("not an algebra: {0}")]
    NotAnAlgebra(String),
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("bad representative set: {0}")]
    Representatives(String),
    #[error("input failed validation:\n{0}")]
    Invalid(Report),
    #[error("mismatched inputs: {0}")]
    Mismatch(String),
    #[error("period must be nonzero")]
    ZeroPeriod,
    #[error("schema error: {0}")]
    Schema(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
