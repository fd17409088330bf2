use thiserror::Error;

/// Errors shared by every module of the crate.
///
/// The variants map onto the process exit codes used by the CLI:
/// domain/shape/precondition problems are "bad input" (exit 2), cap and
/// precision problems are "resource limits" (exit 3).
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("cap exceeded: {0}")]
    CapExceeded(String),

    #[error("not certified at this truncation/precision: {0}")]
    Uncertified(String),

    #[error("undecided at precision: {0}")]
    UndecidedAtPrecision(String),

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal invariant failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
