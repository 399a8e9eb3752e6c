use thiserror::Error;

/// Failure modes shared by every module.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed input: a bad permutation, an unparsable group spec, mismatched groups.
    #[error("input error: {0}")]
    Input(String),
    /// A configured enumeration bound would be exceeded.
    #[error("capacity error: {what} of size {size} exceeds bound {bound}")]
    Capacity {
        what: &'static str,
        size: u64,
        bound: u64,
    },
    /// A stated precondition of an operation does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// A bound formula was evaluated outside its domain.
    #[error("domain gate `{gate}` violated: {detail}")]
    Gate { gate: String, detail: String },
    /// An exact computation contradicts a theorem-backed expectation.
    #[error("falsification: {0}")]
    Falsification(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}

pub(crate) fn gate<T>(gate: &str, detail: impl Into<String>) -> Result<T> {
    Err(Error::Gate {
        gate: gate.to_string(),
        detail: detail.into(),
    })
}
