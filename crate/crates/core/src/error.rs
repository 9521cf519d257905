use thiserror::Error;

/// Errors raised by the exact and numeric layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A pole of the closed form or of a term of the series.
    #[error("pole: {0}")]
    Pole(String),

    /// The operation is well defined but not supported by this engine.
    #[error("unsupported: {0}")]
    Capability(String),

    /// A sequence transformation or quadrature failed to settle.
    #[error("no convergence: {0}")]
    Convergence(String),

    /// Malformed textual or serialized input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
