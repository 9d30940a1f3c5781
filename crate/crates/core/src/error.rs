use thiserror::Error;

use crate::rootsys::{Family, Weight};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family:?}")]
    InvalidRank { family: Family, rank: usize },

    #[error("unknown algebra name `{0}`")]
    UnknownAlgebra(String),

    #[error("cannot parse weight `{0}`")]
    ParseWeight(String),

    #[error("weight has length {got}, algebra has rank {expected}")]
    RankMismatch { expected: usize, got: usize },

    #[error("weight {0} is not dominant")]
    NotDominant(Weight),

    #[error("weight {0} is not self-dual")]
    NotSelfDual(Weight),

    #[error("{0} is not a simple algebra")]
    NotSimple(String),

    #[error("dimension overflow")]
    Overflow,

    #[error("matrix dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("basis is not closed under the bracket")]
    NotClosed,

    #[error("generator {0} is not contained in the parent algebra")]
    NotContained(usize),

    #[error("inconsistent computation: {0}")]
    Inconsistent(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}
