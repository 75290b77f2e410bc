//! Crate-wide error type.

use alloc::string::String;
use core::fmt;

/// Errors produced by ring construction, arithmetic and the check suites.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Malformed input: unknown variable, rank mismatch, bad bounds.
    Input(String),
    /// Series inversion with a non-unit constant term.
    Division(String),
    /// A coefficient beyond the configured truncation order was requested.
    Truncation(String),
    /// An exact division left a nonzero remainder where the theory
    /// guarantees divisibility; indicates an implementation bug.
    Divisibility(String),
    /// A model description failed a load-time invariant.
    Load(String),
    /// Internal consistency failure.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Input(m) => write!(f, "input error: {m}"),
            Error::Division(m) => write!(f, "division error: {m}"),
            Error::Truncation(m) => write!(f, "truncation error: {m}"),
            Error::Divisibility(m) => write!(f, "divisibility violation: {m}"),
            Error::Load(m) => write!(f, "load error: {m}"),
            Error::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
