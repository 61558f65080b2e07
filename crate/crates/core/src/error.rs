use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HfeError {
    #[error("hesitant fuzzy element must be nonempty")]
    EmptyHfe,
    #[error("grade {0} lies outside [0, 1]")]
    Range(String),
    #[error("arity mismatch: {0}")]
    Arity(String),
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("invalid interval piece: {0}")]
    InvalidPiece(String),
    #[error("witness precondition violated: {0}")]
    Witness(String),
    #[error("oracle budget exceeded: {0}")]
    OracleBudget(String),
    #[error("sample instance violates precondition: {0}")]
    Sample(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("order {0} is not defined for interval unions")]
    UnsupportedOrder(String),
    #[error("invalid preference matrix: {0}")]
    Preference(String),
}

impl HfeError {
    pub(crate) fn parse(input: impl Into<String>, reason: impl Into<String>) -> Self {
        HfeError::Parse {
            input: input.into(),
            reason: reason.into(),
        }
    }
}

pub type Result<T, E = HfeError> = std::result::Result<T, E>;
