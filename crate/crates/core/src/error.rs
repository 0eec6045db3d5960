use thiserror::Error;

/// Errors raised by the exact-arithmetic routines and the counting models.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// A polynomial division that should have been exact left a remainder.
    #[error("inexact division: {0}")]
    InexactDivision(String),
    /// Two routes that must agree did not, or an identity produced an impossible value.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
    /// The requested size exceeds the configured enumeration cap.
    #[error("resource limit: {what} supports n <= {max}, got n = {n}")]
    ResourceLimit { what: &'static str, n: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_limit(what: &'static str, n: usize, max: usize) -> Result<()> {
    if n > max {
        Err(Error::ResourceLimit { what, n, max })
    } else {
        Ok(())
    }
}
