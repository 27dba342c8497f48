//! Crate-wide error type.

use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("cell ({row},{col}) lies outside the diagram of {partition}")]
    CellOutsideDiagram {
        row: usize,
        col: usize,
        partition: String,
    },

    #[error("dominance order needs equal sizes, got |lambda|={0} and |mu|={1}")]
    DominanceSizeMismatch(u32, u32),

    #[error("degree cap {cap} exceeded by {context} (needs degree {degree})")]
    DegreeCapExceeded {
        cap: u32,
        degree: u32,
        context: String,
    },

    #[error("inputs must be coprime, got ({0},{1})")]
    NotCoprime(i64, i64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("substitution hits a pole: denominator factor {0} vanishes")]
    PoleHit(String),

    #[error("symmetric-group size {0} exceeds the supported maximum of {1}")]
    OrbitTooLarge(usize, usize),

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("series window failed to stabilize: {0}")]
    WindowUnstable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
