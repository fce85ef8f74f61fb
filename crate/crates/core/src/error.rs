use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("no leading term: polynomial is zero")]
    ZeroPolynomial,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("weak partition flavor mismatch: {0}")]
    FlavorMismatch(String),
    #[error("formula degenerate (d=0): {0}")]
    Degenerate(String),
    #[error("input is not homogeneous (degrees {0:?})")]
    NotHomogeneous(Vec<u64>),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("io: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::InvalidInput(e.to_string())
    }
}
