use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("divisor classes live in different lattices")]
    LatticeMismatch,

    #[error("rings differ")]
    RingMismatch,

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("direct summands carry different twists")]
    TwistMismatch,

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("weights differ: |lambda| = {lambda}, |mu| = {mu}")]
    WeightMismatch { lambda: u64, mu: u64 },

    #[error("partition has {parts} parts, more than the rank {rank}")]
    TooManyParts { parts: usize, rank: usize },

    #[error("{0}")]
    Domain(String),

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn invariant(msg: impl Into<String>) -> Self {
        Error::InvariantViolation(msg.into())
    }
}
