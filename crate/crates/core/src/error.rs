use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("result exceeds the supported integer width")]
    Overflow,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("invalid diagram: {0}")]
    InvalidPartition(String),
    #[error("invalid factorization: {0}")]
    InvalidFactorization(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
