use thiserror::Error;

/// Errors raised by the library.
///
/// The three classes map one-to-one onto the CLI exit codes: malformed input,
/// exhausted resource budgets, and internal invariant violations (bugs).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("resource budget exceeded: {0}")]
    Resource(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}

pub(crate) fn invariant<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Invariant(msg.into()))
}
