use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("representation is not faithful: {0}")]
    NotFaithful(String),

    #[error("character table integrity failure: {0}")]
    TableIntegrity(String),

    #[error("square does not commute: {0}")]
    NonCommuting(String),

    /// A property that the theory guarantees failed to hold; indicates a bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit status: 3 for broken invariants, 2 for bad input.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Internal(_) | Error::NonCommuting(_) => 3,
            _ => 2,
        }
    }
}
