use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// Operand dimensions do not match (wrong party count, wrong matrix size).
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A desk-scale guard would be exceeded (memory or enumeration size).
    #[error("size guard exceeded: {what} (limit {limit})")]
    GuardExceeded { what: String, limit: usize },

    /// A parameter is outside its documented range.
    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    /// An input table or map is missing required entries.
    #[error("incomplete input: {0}")]
    IncompleteInput(String),

    /// A closed-form construction failed its residual check.
    #[error("construction failure: {0}")]
    ConstructionFailure(String),

    /// The nonlocal model is queried outside its validity region.
    #[error("model validity violated: {0}")]
    ModelInvalid(String),
}
