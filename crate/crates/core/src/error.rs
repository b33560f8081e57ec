use thiserror::Error;

/// Errors raised by the counting, enumeration and table routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument fell outside the domain on which a count is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// A sequence handed in as a permutation of `[n]` was not one.
    #[error("not a permutation of [{n}]: duplicates {duplicates:?}, missing {missing:?}")]
    NotAPermutation {
        n: usize,
        duplicates: Vec<usize>,
        missing: Vec<usize>,
    },

    /// Brute-force enumeration was asked for an `n` above its guard.
    #[error(
        "n = {n} exceeds the enumeration guard of {guard}; raise SUCCESSION_MAX_GUARD or pass --no-guard"
    )]
    GuardExceeded { n: usize, guard: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
