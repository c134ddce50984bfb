use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors raised by the engine.
///
/// Budget violations are a distinct variant so callers can turn them into an
/// inconclusive outcome instead of a wrong answer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("degree {0} exceeds the supported maximum of 65535")]
    DegreeTooLarge(usize),
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("repeated point {0}")]
    RepeatedPoint(usize),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("{what} budget exceeded: needs {needed}, limit {limit}")]
    Budget { what: &'static str, needed: u128, limit: u128 },
    #[error("k = {k} out of range for degree {degree}")]
    KOutOfRange { k: usize, degree: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("element is not a member of the group")]
    NotMember,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("no applicable strategy: {0}")]
    NoStrategy(String),
    #[error("data file error: {0}")]
    DataFile(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget { .. } | Error::NoStrategy(_))
    }

    pub(crate) fn budget(what: &'static str, needed: impl Into<u128>, limit: impl Into<u128>) -> Self {
        Error::Budget { what, needed: needed.into(), limit: limit.into() }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
