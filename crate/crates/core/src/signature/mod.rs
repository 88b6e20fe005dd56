//! Exact truncated signatures of piecewise-linear paths, plus the
//! stream-to-path transforms (lead-lag, missing-value indicator) used to
//! lift weekly self-report streams into paths.

mod path;
mod stream;
mod tensor;
mod word;

pub use path::Path;
pub use stream::{augment_with_indicator, lead_lag};
pub use tensor::{chen_product, segment_signature, signature, Signature, SignatureDump, WordValue};
pub use word::{feature_count, Word};

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum SignatureError {
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("truncation depth must be at least 1")]
    ZeroDepth,
    #[error("path must contain at least one point")]
    EmptyPath,
    #[error("point data length {len} is not a multiple of dimension {dim}")]
    RaggedPoints { len: usize, dim: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("depth mismatch: {left} vs {right}")]
    DepthMismatch { left: usize, right: usize },
    #[error("stream needs at least 2 observations, got {got}")]
    StreamTooShort { got: usize },
    #[error("cannot fill a series with no observed values")]
    AllMissing,
    #[error("invalid word: letter {letter} outside alphabet 1..={dim}")]
    InvalidLetter { letter: u8, dim: usize },
    #[error("word length must be between 1 and the truncation depth")]
    InvalidWordLength,
}
