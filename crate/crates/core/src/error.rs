use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown series '{0}' (expected one of A, B, C, D, E, F, G)")]
    UnknownSeries(String),
    #[error("rank {rank} is not valid for series {series}")]
    RankOutOfRange { series: char, rank: usize },
    #[error("index {index} exceeds rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("elements belong to different root systems ({0} vs {1})")]
    MixedRootSystems(String, String),
    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<usize>),
    #[error("y = {y:?} is not below w = {w:?} in the Bruhat order")]
    NotBelow { y: Vec<usize>, w: Vec<usize> },
    #[error("interval cap exceeded: length {length} > cap {cap}")]
    CapExceeded { length: usize, cap: usize },
    #[error("denominator vanishes at q = 1")]
    PoleAtOne,
    #[error("size {size} exceeds the guard {max}")]
    SizeGuard { size: usize, max: usize },
    #[error("shape mismatch: {0}")]
    Shape(String),
}

pub type Result<T> = std::result::Result<T, Error>;
