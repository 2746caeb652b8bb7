use thiserror::Error;

/// Every failure the library reports.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MacError {
    /// Malformed or out-of-contract input (bad labels, non-simplices, wrong flavor...).
    #[error("input error: {0}")]
    Input(String),

    /// A line-addressed error in a complex file or expression.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A configured size cap would be exceeded.
    #[error("resource cap exceeded: {0}")]
    Resource(String),

    /// An internal algebraic invariant failed (for example a boundary that does not square to zero).
    #[error("invariant violation: {0}")]
    Invariant(String),

    /// The complex does not carry the structure the operation needs
    /// (no fundamental class, top homology not infinite cyclic...).
    #[error("not a manifold: {0}")]
    NotManifold(String),
}

impl MacError {
    pub fn input(msg: impl Into<String>) -> Self {
        MacError::Input(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        MacError::Resource(msg.into())
    }

    pub fn invariant(msg: impl Into<String>) -> Self {
        MacError::Invariant(msg.into())
    }

    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        MacError::Parse {
            line,
            message: msg.into(),
        }
    }
}

pub type Result<T, E = MacError> = std::result::Result<T, E>;
