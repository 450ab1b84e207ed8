//! Error type shared by every module.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// Invalid user input: bad algebra, level, truncation or file.
    #[error("configuration error: {0}")]
    Config(String),
    /// A mathematical operation outside its domain (pole, non-divisibility).
    #[error("domain error: {0}")]
    Domain(String),
    #[error("not a unit: {0}")]
    NotUnit(String),
    /// A requested quantity lies beyond the active truncation.
    #[error("truncation error: {0}")]
    Truncation(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
