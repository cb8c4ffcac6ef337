use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be at least 2, got {0}")]
    InvalidRank(usize),

    #[error("no lattice element {kind}{idx} at rank {n}")]
    InvalidColumn { kind: &'static str, idx: usize, n: usize },

    #[error("column set {0:?} is not an element of the lattice at rank {1}")]
    NotALatticeElement(Vec<usize>, usize),

    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),

    #[error("parts {0:?} are not weakly decreasing")]
    NotAPartition(Vec<u32>),

    #[error("diagram {diagram} has length {len}, more than the allowed {max}")]
    LengthViolation { diagram: String, len: usize, max: usize },

    #[error("interlacing violated: {0}")]
    NotInterlacing(String),

    #[error("columns do not form a chain: {0}")]
    NotAChain(String),

    #[error("weight base N = {base} must exceed 2n = {twice_n}")]
    WeightBaseTooSmall { base: u64, twice_n: usize },

    #[error("pattern is not order preserving: {0}")]
    NotOrderPreserving(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
