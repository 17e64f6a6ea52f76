use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("breakpoints must be strictly increasing (entry {index})")]
    NotIncreasing { index: usize },
    #[error("window width must be positive, got {0}")]
    NonPositiveWidth(String),
    #[error("invalid window range: need 0 < {shortest} <= {longest}")]
    InvalidRange { shortest: String, longest: String },
    #[error("invalid delay parameters: {0}")]
    InvalidParams(String),
    #[error("not a signal: {0}")]
    NotSignal(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown counterexample {0:?} (expected 5.3 or 5.4)")]
    UnknownFixture(String),
    #[error("malformed document: {0}")]
    Document(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
