use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be at least 4 for type D, got {0}")]
    RankTooSmall(usize),

    #[error("node {node} is out of range 1..={rank}")]
    NodeOutOfRange { node: usize, rank: usize },

    #[error("parity violation: node {node} with shift {shift} requires node - shift to be odd")]
    Parity { node: usize, shift: i64 },

    #[error("node {node} has no path family (only nodes 1..={max} do)")]
    NoPathFamily { node: usize, max: usize },

    #[error("paths belong to different families")]
    FamilyMismatch,

    #[error("move not applicable at column {column}, level {level}")]
    MoveNotApplicable { column: usize, level: i64 },

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("cannot parse monomial {input:?}: {reason}")]
    Parse { input: String, reason: String },
}
