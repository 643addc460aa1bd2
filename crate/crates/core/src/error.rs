use std::fmt;

use thiserror::Error;

/// Errors raised by the exact kernels.
///
/// Every variant carries enough context to be shown to a user directly; the
/// CLI maps them onto exit codes through [`Error::exit_code`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("rational input: {0} is rational, an irrational value is required")]
    RationalInput(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("{0} has no successor")]
    NoSuccessor(String),
    #[error("{0} has no predecessor")]
    NoPredecessor(String),
    #[error("not found: {0}")]
    NotFound(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("resource limit: {0}")]
    ResourceLimit(String),
    #[error("division by zero")]
    DivideByZero,
    #[error("precision exhausted: {0}")]
    Precision(String),
    #[error("indeterminate sign: {0}")]
    IndeterminateSign(String),
    #[error("invalid certificate: {0}")]
    Certificate(String),
    #[error("oracle guard exceeded: {0}")]
    Guard(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl fmt::Display) -> Self {
        Error::Domain(msg.to_string())
    }

    pub(crate) fn parse(pos: usize, msg: impl fmt::Display) -> Self {
        Error::Parse {
            pos,
            msg: msg.to_string(),
        }
    }

    /// Process exit code used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Domain(_) | Error::RationalInput(_) => 2,
            Error::Unsupported(_) | Error::NoSuccessor(_) | Error::NoPredecessor(_) => 2,
            Error::NotFound(_) | Error::DivideByZero | Error::Certificate(_) => 2,
            Error::ResourceLimit(_) | Error::Guard(_) | Error::Precision(_) => 3,
            Error::IndeterminateSign(_) => 3,
            Error::Internal(_) => 1,
        }
    }
}
