use thiserror::Error;

/// Errors surfaced by the library. Variants mirror the failure modes of the
/// individual operations; anything not listed here is a bug, not an error.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: |shape| = {shape_size} but weight sums to {weight_sum}")]
    SizeMismatch { shape_size: usize, weight_sum: usize },

    #[error("matrix is not nilpotent")]
    NotNilpotent,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("partition has no parts")]
    EmptyPartition,

    #[error("tableau weight {tableau:?} does not match slice weight {slice:?}")]
    WeightMismatch { tableau: Vec<usize>, slice: Vec<usize> },

    #[error("chain of Jordan types is not the chain of a semi-standard tableau: {0}")]
    NotASemistandardChain(String),

    #[error("stage ({letter},{occurrence}) admits no column satisfying the rank conditions: {detail}")]
    IncompatibleStage { letter: usize, occurrence: usize, detail: String },

    #[error("stage ({letter},{occurrence}) still violates the exclusion set after {retries} retries")]
    RetriesExhausted { letter: usize, occurrence: usize, retries: usize },

    #[error("quotient dimension is {got}, expected {expected}")]
    QuotientDimensionMismatch { got: usize, expected: usize },

    #[error("matrix is not the image of a slice point: {0}")]
    NotPhiImage(String),

    #[error("point is not generic: {0}")]
    NotGeneric(String),

    #[error("sampled point failed re-verification: {0}")]
    VerificationFailed(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
