use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A caller-supplied argument violates an operation's precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Malformed graph6 input.
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    /// An exact computation refused to run because the instance exceeds its cap.
    #[error("instance too large for exact {what}: n = {n} exceeds cap {cap}")]
    TooLarge {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    /// A closed form was asked for outside the parameter range it is asserted on.
    #[error("formula {formula} is not asserted for {params}: {reason}")]
    OutOfRange {
        formula: &'static str,
        params: String,
        reason: String,
    },

    /// A search mode / host / pattern combination that is not justified.
    #[error("unsupported combination: {0}")]
    Unsupported(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
