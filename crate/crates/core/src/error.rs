use thiserror::Error;

#[derive(Error, Debug)]
pub enum CoreError {
    /// A guarded computation would exceed its configured resource budget.
    #[error("resource limit exceeded for {what}: {detail}")]
    ResourceLimit { what: &'static str, detail: String },

    /// The caller supplied malformed or out-of-domain input.
    #[error("invalid input: {0}")]
    BadInput(String),

    /// An operation that requires an oriented tree received something else.
    #[error("not a tree quiver: {0}")]
    NotATree(String),

    #[error("duplicate interpolation abscissa: {0}")]
    DuplicateAbscissa(String),

    /// An internal invariant failed; results must not be trusted.
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, CoreError>;
