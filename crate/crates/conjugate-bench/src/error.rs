use thiserror::Error;

/// Errors reported by every fallible operation in this crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A constructor or operation argument is out of its stated domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A signal has no usable energy (or is otherwise unusable as a density).
    #[error("degenerate signal: {0}")]
    DegenerateSignal(String),

    /// A deliberately quadratic code path was asked to exceed its size guard.
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),

    /// A configuration (CLI arguments, constants file) is invalid.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// An empty input where at least one element is required.
    #[error("empty input: {0}")]
    EmptyInput(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
