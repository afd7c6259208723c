//! Crate-wide error type.

use alloc::string::String;
use core::fmt;

/// Errors produced by the model and its solvers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Unknown dataset id or a malformed constants table.
    Config(String),
    /// Input outside the mathematical domain of an operation.
    Domain(String),
    /// A value failed a structural invariant (normalization, grid size, ...).
    Validation(String),
    /// The radial eigensolver could not produce a usable spectrum.
    Solver(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Config(msg) => write!(f, "configuration error: {msg}"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Validation(msg) => write!(f, "validation error: {msg}"),
            Error::Solver(msg) => write!(f, "solver error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
