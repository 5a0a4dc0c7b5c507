use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("internal degree {0} is odd")]
    OddDegree(i32),
    #[error("index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: i64, strands: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("incompatible operands: {0}")]
    Incompatible(String),
    #[error("not a chain map: {0}")]
    NotAChainMap(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
