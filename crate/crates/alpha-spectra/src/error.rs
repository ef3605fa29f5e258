use thiserror::Error;

/// Library-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// A brute-force scan was asked for more vertices than its hard cap.
    #[error("graph has {n} vertices, exceeds the {cap}-vertex cap for {what}")]
    Capacity { what: &'static str, n: usize, cap: usize },

    /// graph6 input could not be decoded.
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    /// A parameter was outside its documented domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A partition did not cover the vertex set disjointly.
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    /// A matrix that must be symmetric was not.
    #[error("matrix not symmetric: max asymmetry {0:e}")]
    NotSymmetric(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
