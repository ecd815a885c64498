use thiserror::Error;

use crate::staralg::AlgebraKind;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("N must be at least 3, got {0}")]
    InvalidN(usize),
    #[error("algebra mismatch: {left:?} vs {right:?}")]
    AlgebraMismatch { left: AlgebraKind, right: AlgebraKind },
    #[error("rank mismatch: N={left} vs N={right}")]
    RankMismatch { left: usize, right: usize },
    #[error("variable V{var} is not in the coefficient ring")]
    VariableOutOfRange { var: usize },
    #[error("idempotent input {0}")]
    IdempotentInput(String),
    #[error("unknown special element {0:?}")]
    UnknownSpecial(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("string is not idempotent-chained")]
    NotChained,
    #[error("truncation {given} too small, slice needs exponents up to {needed}")]
    InsufficientTruncation { needed: u32, given: u32 },
    #[error("element is not a cocycle")]
    NotACocycle,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}
