use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be at least 1, got {0}")]
    InvalidRank(u32),

    #[error("node {node} out of range 1..={rank}")]
    NodeOutOfRange { node: u32, rank: u32 },

    #[error("column {position} out of range 1..={max}")]
    PositionOutOfRange { position: usize, max: usize },

    #[error("(i, k) = ({node}, {level}) is not on the lattice: i - k must be odd (try k = {} or k = {})", level - 1, level + 1)]
    Parity { node: u32, level: i64 },

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("path cannot be lowered at ({position}, {height})")]
    CannotLower { position: usize, height: i64 },

    #[error("path cannot be raised at ({position}, {height})")]
    CannotRaise { position: usize, height: i64 },

    #[error("move at ({position}, {height}) leaves the admissible set")]
    NotAdmissible { position: usize, height: i64 },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
