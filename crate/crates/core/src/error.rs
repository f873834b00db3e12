use thiserror::Error;

/// Errors raised by the library.
///
/// `Input` and `Parse` describe bad caller data. `Inconsistency` means an
/// internal cross-check failed (a theorem-level identity did not hold), which
/// points at a tolerance setting or a bug rather than at the input.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("internal consistency error: {0}")]
    Inconsistency(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn inconsistency(msg: impl Into<String>) -> Self {
        Error::Inconsistency(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
