use thiserror::Error;

/// Errors raised by diagram constructions, rewrites and invariant computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Dangling references, malformed attachment sites and similar structural defects.
    #[error("structural error: {0}")]
    Structural(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("rewrite not applicable: {0}")]
    RewriteNotApplicable(String),
    #[error("invalid state: {0}")]
    State(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("resource limit: {0}")]
    Resource(String),
    /// Two computations that must agree did not.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
