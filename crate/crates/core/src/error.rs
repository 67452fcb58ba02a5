use thiserror::Error;

use crate::arena::FormId;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown form handle {0:?}")]
    InvalidHandle(FormId),

    #[error("form {0:?} is not impartial")]
    NotImpartial(FormId),

    #[error("{numerator}/{denominator} is not a dyadic rational")]
    NonDyadic { numerator: i64, denominator: i64 },

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("position does not belong to family {family}: {reason}")]
    FamilyMismatch { family: &'static str, reason: String },

    #[error("cannot classify: {0}")]
    Unclassifiable(String),

    #[error("bound {given} too small, need at least {required}")]
    BoundTooSmall { given: u32, required: u32 },

    #[error("mutant flower needs a nonempty nimber set")]
    EmptyNimberSet,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("DIMACS line {line}: {message}")]
    Dimacs { line: usize, message: String },

    #[error("formula is not in Tovey form: {0}")]
    NotTovey(String),

    #[error("instance too large for full game solving: {vars} variables, {clauses} clauses (limit {max_vars}/{max_clauses})")]
    SizeBoundExceeded { vars: usize, clauses: usize, max_vars: usize, max_clauses: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
