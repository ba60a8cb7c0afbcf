use thiserror::Error;

/// Errors raised by counting, series and audit routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("brute-force enumeration refused: n = {n} exceeds the cap of {cap}")]
    CapExceeded { n: i64, cap: i64 },

    #[error("singular term: {0}")]
    Singular(String),

    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("coefficient index {index} outside 0..={order}")]
    CoefficientOutOfRange { index: i64, order: usize },

    #[error("malformed grid: {0}")]
    Grid(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn require(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Precondition(what()))
    }
}
