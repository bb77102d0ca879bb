use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Malformed equation text. `token` is the offending fragment.
    #[error("parse error at `{token}`: {reason}")]
    Parse { token: String, reason: String },
    /// A precondition on the arguments of an operation was violated.
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    /// The search hit a resource limit before reaching a verdict. Never to be
    /// read as "no solution".
    #[error("search indeterminate: {reason}")]
    Indeterminate { reason: &'static str, states_explored: u64 },
}

impl Error {
    pub(crate) fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }
}
