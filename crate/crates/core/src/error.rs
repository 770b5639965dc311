use thiserror::Error;

use crate::algebra::VarId;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("missing value for variable {0}")]
    MissingVariable(VarId),
    #[error("index subsets have different cardinalities ({0} and {1})")]
    CardinalityMismatch(usize, usize),
    #[error("{0} is not a subset of {1}")]
    NotSubset(String, String),
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("reciprocal of a jet with zero constant term")]
    ZeroConstantTerm,
    #[error("jet order {have} is smaller than the required order {needed}")]
    InsufficientOrder { needed: usize, have: usize },
    #[error("derivative in variable {0} which is not active in the jet")]
    InactiveVariable(VarId),
    #[error("jets live on different spaces or base points")]
    JetMismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("group element not defined at the point: {0}")]
    NotDefined(String),
    #[error("pole: factor {0} vanishes")]
    Pole(String),
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
