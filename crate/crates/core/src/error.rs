use thiserror::Error;

/// Errors raised by the library. Every variant carries enough context to
/// produce a usage message without re-deriving the failed precondition.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("no sign change on the bracket ({lo}, {hi}) for p = {p}")]
    NoBracket { p: u32, lo: f64, hi: f64 },

    #[error("root iteration did not converge for p = {0}")]
    NoConvergence(u32),

    #[error("coefficient {0} is not an integer")]
    NonIntegral(String),

    #[error("closed forms disagree: {0}")]
    FormsDisagree(String),

    #[error("cannot parse {input:?} as {what}")]
    Parse { input: String, what: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
