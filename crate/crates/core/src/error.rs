//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Operand shapes do not conform for the requested operation.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// A length that must be a power of two (group size, Haar order) is not.
    #[error("length {0} is not a power of two >= 2")]
    NotPowerOfTwo(usize),

    /// Group size must be even for the alternating eigenvector to exist.
    #[error("group size {0} is odd; the alternating rank indicator needs an even K")]
    OddGroupSize(usize),

    /// Configuration failed validation.
    #[error("invalid config: {0}")]
    InvalidConfig(String),

    /// Basis learning needs a minimum number of patches.
    #[error("too few patches: got {got}, need at least {need}")]
    TooFewPatches { got: usize, need: usize },

    /// Subimage too small for noise estimation.
    #[error("subimage {rows}x{cols} is smaller than the 16x16 estimator minimum")]
    SubimageTooSmall { rows: usize, cols: usize },

    /// Majority vote over an empty list.
    #[error("cannot vote over an empty list")]
    EmptyVote,

    /// A persisted bases file failed its magic/version/shape checks.
    #[error("corrupt bases file: {0}")]
    CorruptBasesFile(String),

    /// The group-mean refiner hook failed; callers fall back to identity.
    #[error("refiner failed: {0}")]
    RefinerFailed(String),

    /// An iterative numeric kernel failed to converge.
    #[error("numeric failure: {0}")]
    NumericFailure(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
