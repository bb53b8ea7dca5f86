use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<u8>),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("model mismatch: {0}")]
    ModelMismatch(String),
    #[error("invalid simplex: {0}")]
    InvalidSimplex(String),
    #[error("truncation exceeded: need dimension {needed}, model is truncated at {truncation}")]
    TruncationExceeded { needed: usize, truncation: usize },
    #[error("not a cocycle: {0}")]
    NotCocycle(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
