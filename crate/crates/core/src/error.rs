//! Error types shared across the core crate.

use alloc::string::String;
use alloc::vec::Vec;

/// Errors produced by core operations.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CoreError {
    /// An argument violated an operation's preconditions.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Two rasters or tensors that must agree in shape do not.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// Tile set passed to `stitch` leaves a gap or overlaps.
    #[error("tiles do not partition the output: {0}")]
    BadPartition(String),

    /// Weights/checkpoint container could not be decoded.
    #[error(transparent)]
    Weights(#[from] WeightsError),
}

/// Errors from the binary weights/checkpoint container.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum WeightsError {
    #[error("bad magic {0:?}, expected \"MSEG\"")]
    BadMagic([u8; 4]),
    #[error("unsupported format version {0}")]
    UnsupportedVersion(u32),
    #[error("truncated file while reading {0}")]
    Truncated(&'static str),
    #[error("block name is not valid UTF-8")]
    BadName,
    #[error("duplicate block {0:?}")]
    DuplicateBlock(String),
    #[error("block {name:?} has shape {found:?}, expected {expected:?}")]
    BlockShape {
        name: String,
        expected: Vec<usize>,
        found: Vec<usize>,
    },
    #[error("block {0:?} contains a non-finite value")]
    NonFinite(String),
    #[error("missing block {0:?}")]
    MissingBlock(String),
    #[error("unexpected extra block {0:?}")]
    UnexpectedBlock(String),
    #[error("invalid architecture field: {0}")]
    BadSpec(String),
}

pub type Result<T, E = CoreError> = core::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> CoreError {
    CoreError::InvalidArgument(msg.into())
}

pub(crate) fn mismatch(msg: impl Into<String>) -> CoreError {
    CoreError::ShapeMismatch(msg.into())
}
