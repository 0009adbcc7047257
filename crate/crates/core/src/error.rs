//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A pivot underflowed while factorizing a small matrix; the caller is
    /// expected to reinitialize or skip the offending update.
    #[error("singular matrix: {context}")]
    SingularMatrix { context: &'static str },

    /// The Jacobi eigensolver did not reduce the off-diagonal mass within the
    /// sweep cap.
    #[error("eigensolver failed to converge after {sweeps} sweeps")]
    ConvergenceFailure { sweeps: usize },

    #[error("input too short: need at least {needed} samples, got {got}")]
    InputTooShort { needed: usize, got: usize },

    #[error("shape mismatch: {context}")]
    ShapeMismatch { context: String },

    #[error("channel count mismatch: expected {expected}, got {got}")]
    ChannelMismatch { expected: usize, got: usize },

    /// The noise spatial covariance was not rank-(M-1) within tolerance.
    #[error("rank deficiency violation: {context}")]
    RankDeficiencyViolation { context: String },

    /// A non-finite value appeared mid-update; the sweep is aborted.
    #[error("non-finite intermediate in {context}")]
    NonFiniteIntermediate { context: &'static str },

    #[error("reference signal is all zero")]
    ZeroReference,

    /// Cannot set an SNR against a zero-power speech signal.
    #[error("speech signal has zero power over its non-silent support")]
    SilentSpeech,

    /// Timing report requested before any frame was processed.
    #[error("pipeline has not processed any frames yet")]
    NotStarted,

    #[error("invalid configuration: {context}")]
    InvalidConfig { context: String },

    #[error("wav: {0}")]
    Wav(#[from] crate::wav::WavError),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
