use thiserror::Error;

use crate::hyperfield::InstanceId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element of {found} used where {expected} was expected")]
    InstanceMismatch {
        expected: InstanceId,
        found: InstanceId,
    },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("set is not finitely enumerable: {0}")]
    NonEnumerable(String),
    #[error("operation is undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("root hint does not expand to the polynomial: {0}")]
    HintMismatch(String),
    #[error("polynomial must be monic (leading coefficient equal to one)")]
    NonMonic,
    #[error("expected {expected} roots, got {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    /// Parse failures exit with 2, everything else with 1.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) => 2,
            _ => 1,
        }
    }
}
