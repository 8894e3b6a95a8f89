use thiserror::Error;

use crate::field::FieldSpec;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("singular system: {0}")]
    Singular(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("axioms violated: {0}")]
    AxiomViolation(String),
    #[error("search budget of {0} candidate evaluations exceeded")]
    BudgetExceeded(u64),
    #[error("{0}")]
    HintRequired(String),
    #[error("candidate family is infinite: {0}")]
    InfiniteFamily(String),
    #[error("no grouplike/skew-primitive basis: {0}")]
    StrataUnavailable(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
