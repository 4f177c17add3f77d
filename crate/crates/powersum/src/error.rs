use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("weight mismatch: {left} vs {right}")]
    WeightMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid kernel parameters: {0}")]
    InvalidKernelParams(String),

    #[error("{what}: requested {requested}, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    #[error("enumeration guard: estimated {estimate:.3e} items exceeds limit {limit:.3e}")]
    ExplosionGuard { estimate: f64, limit: f64 },

    #[error("matrix indefinite: min eigenvalue {min_eigenvalue:e} below tolerance -{tolerance:e}")]
    Indefinite {
        min_eigenvalue: f64,
        tolerance: f64,
    },

    #[error("coincident entries: minimum gap {gap:e} is below {tolerance:e}")]
    CoincidentEntries { gap: f64, tolerance: f64 },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
