use thiserror::Error;

use crate::report::CheckReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("pole: denominator vanishes at {0}")]
    Pole(String),

    #[error("cannot evaluate a negative power of the parameter at zero")]
    NegativePowerAtZero,

    #[error("structural error: {0}")]
    Structural(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    /// A construction refused its input because a precondition check failed.
    #[error("precondition `{}` failed with {} violation(s)", .0.check, .0.total_violations)]
    Precondition(Box<CheckReport>),
}

impl Error {
    pub(crate) fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }
}
