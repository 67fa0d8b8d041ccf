use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid curve: {0}")]
    InvalidCurve(String),

    #[error("curve family has not been validated as pseudo-segments")]
    NotValidated,

    #[error("curve family is not a valid pseudo-segment family ({0} violations)")]
    InvalidFamily(usize),

    #[error("invalid vertex set: {0}")]
    InvalidVertexSet(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("exact search refused: {size} vertices exceed exact_limit {limit}")]
    ExactLimit { size: usize, limit: usize },

    #[error("oracle failure: {0}")]
    OracleFailure(String),

    #[error("certificate mismatch: {0}")]
    Certificate(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("malformed cotree: {0}")]
    MalformedCotree(String),

    #[error("cutting failed after {attempts} attempts")]
    CuttingFailed { attempts: usize },

    #[error("generator gave up after {0} resamples")]
    ResampleBudget(usize),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
