//! Error types shared across the library.

use thiserror::Error;

/// Errors produced by scenario construction, the admission pipeline, the
/// exhaustive search, and report export.
#[derive(Debug, Error)]
pub enum Error {
    /// A geometric input collapsed to a zero-length direction vector.
    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(&'static str),

    /// A configuration field is out of its documented range.
    #[error("invalid config: {0}")]
    InvalidConfig(String),

    /// A per-group element budget exceeds the panel size.
    #[error("allocation of {allocated} elements exceeds panel size {panel}")]
    AllocationExceedsPanel { allocated: u64, panel: u64 },

    /// A delay was requested over a link with zero rate.
    #[error("zero link rate")]
    ZeroRate,

    /// A processing delay was requested with zero compute allocated.
    #[error("zero compute allocation")]
    ZeroAllocation,

    /// The rate normalizer for the utility is not positive.
    #[error("rate normalizer must be positive, got {0}")]
    InvalidNormalizer(f64),

    /// The exhaustive search was asked to enumerate more users than its cap.
    #[error("instance has {users} users, exhaustive cap is {cap}")]
    InstanceTooLarge { users: usize, cap: usize },

    /// Two parallel per-user slices disagree on length or ids.
    #[error("mismatched inputs: {0}")]
    MismatchedInputs(String),

    /// Filesystem or serialization failure while writing a report.
    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    /// JSON parse or encode failure.
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    /// CSV encode failure.
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the CLI: 1 for configuration problems, 2 for IO.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io(_) | Error::Csv(_) => 2,
            _ => 1,
        }
    }
}
