use thiserror::Error;

/// Errors produced by the physics and linear-algebra layers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}x{expected}, got {got}x{got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("unsupported matrix dimension {0} (only 2 and 4 are supported)")]
    UnsupportedDimension(usize),

    #[error("matrix is not Hermitian (max |M - M^dagger| = {0:e})")]
    NotHermitian(f64),

    #[error("trace is not 1 (got {0})")]
    InvalidTrace(f64),

    #[error("matrix is not positive semidefinite (min eigenvalue {0:e})")]
    NotPositive(f64),

    #[error("eigensolver did not converge (off-diagonal norm {0:e})")]
    NoConvergence(f64),

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("invalid probability pair ({survival}, {transition})")]
    InvalidProbabilities { survival: f64, transition: f64 },

    #[error("amplitudes are not normalized: |a_aa|^2 + |a_ab|^2 = {0}")]
    NotNormalized(f64),

    #[error("unknown experiment preset `{0}`")]
    UnknownPreset(String),

    #[error("invalid sweep: {0}")]
    InvalidSweep(String),

    #[error("no interior minimum found in the sampled curve")]
    NoInteriorMinimum,

    #[error("audit mismatch at L = {l} m: closed vs general residual {residual:e}")]
    AuditMismatch { l: f64, residual: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameter {
        name,
        reason: reason.into(),
    }
}
