//! Error types shared by every module.
//!
//! Errors are split into three families because the CLI maps them onto exit
//! codes: precondition/hypothesis violations (the input does not satisfy the
//! contract) versus certificate failures (the input was fine, but a computed
//! certificate did not meet its tolerance).

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoreError {
    /// The caller handed in data that violates an operation's precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A stated hypothesis of the underlying theorem fails at grid
    /// resolution (e.g. the target does not vanish near the boundary).
    #[error("hypothesis certification failed: {0}")]
    Hypothesis(String),

    /// A computed certificate missed its tolerance.
    #[error("certificate failed: {0}")]
    Certificate(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CoreError {
    pub fn precondition(msg: impl Into<String>) -> Self {
        CoreError::Precondition(msg.into())
    }
    pub fn hypothesis(msg: impl Into<String>) -> Self {
        CoreError::Hypothesis(msg.into())
    }
    pub fn certificate(msg: impl Into<String>) -> Self {
        CoreError::Certificate(msg.into())
    }

    /// Exit code the CLI uses for this error (1 = certificate, 2 = bad input).
    pub fn exit_code(&self) -> i32 {
        match self {
            CoreError::Precondition(_) | CoreError::Hypothesis(_) => 2,
            CoreError::Certificate(_) => 1,
            CoreError::Io(_) => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, CoreError>;
