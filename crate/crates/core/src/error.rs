use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("image sequence is not a bijection of 1..{degree}")]
    NotBijection { degree: usize },

    #[error("point {point} out of range 1..{degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("group order exceeds cap {cap}")]
    OrderCapExceeded { cap: usize },

    #[error("degree {degree} exceeds cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },

    #[error("element {0} is not in the group")]
    NotInGroup(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("malformed table: {0}")]
    Malformed(String),

    #[error("not a rack: {0}")]
    NotRack(String),

    #[error("condition (A) fails on orbit {orbit}: {witness} fixes the representative but does not commute with pi")]
    CentralizerCondition { orbit: usize, witness: String },

    #[error("invalid blueprint: {0}")]
    Blueprint(String),

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("seed elements have a proper normal closure")]
    ProperNormalClosure,

    #[error("engines disagree: brute found {brute} classes, structured found {structured}")]
    EngineDisagreement { brute: usize, structured: usize },

    #[error("invalid E matrix: {0}")]
    EMatrix(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    /// True for errors caused by exceeding a configured resource cap.
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            Error::OrderCapExceeded { .. } | Error::DegreeCapExceeded { .. }
        )
    }
}
