//! Error types shared by every module of the crate.

use alloc::string::String;

/// Malformed text input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    /// A character outside the step alphabet.
    #[error("unexpected character {found:?} at index {index}")]
    InvalidChar { index: usize, found: char },
    /// Structural problem with a composite value (missing separator, bad integer, ...).
    #[error("malformed {what}: {detail}")]
    Malformed { what: &'static str, detail: String },
}

/// A well-formed value that does not satisfy the precondition of the operation
/// it was handed to.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ContractError {
    #[error("path {0} is not balanced")]
    NotBalanced(String),
    #[error("mark index {index} is outside 0..={len}")]
    MarkOutOfRange { index: usize, len: usize },
    #[error("expected {expected}, got {found}")]
    Mismatch { expected: String, found: String },
}

/// Either failure mode, for entry points that both parse and validate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Contract(#[from] ContractError),
}

pub(crate) fn mismatch(expected: impl Into<String>, found: impl Into<String>) -> ContractError {
    ContractError::Mismatch {
        expected: expected.into(),
        found: found.into(),
    }
}
