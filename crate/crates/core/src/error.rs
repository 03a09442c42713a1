//! Error type shared by every module.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("input error: {0}")]
    Input(String),
    /// A computation needed a fact the bounded procedures could not settle.
    #[error("undecided: {0}")]
    Undecided(String),
    #[error("refused: {0}")]
    Refused(String),
    /// An identity that must hold failed; indicates a bug rather than bad input.
    #[error("consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
