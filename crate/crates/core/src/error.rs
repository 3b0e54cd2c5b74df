//! Error values shared across the crate.
//!
//! Degenerate inputs (zero denominators, division by zero, undersized sets,
//! exceeded brute-force caps) are recoverable errors, not panics: callers
//! such as the sweep harness skip or record them and keep going.

use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A rational was constructed with denominator zero.
    ZeroDenominator,
    /// Division by the zero element of the field.
    DivisionByZero,
    /// Two scalars (or sets) from different fields were combined.
    MixedFields { left: &'static str, right: &'static str },
    /// A set operation received fewer elements than it requires.
    SetTooSmall { required: usize, actual: usize },
    /// A brute-force path was asked to exceed its configured cap.
    CapExceeded { what: &'static str, limit: u64, requested: u64 },
    /// A parameter is outside the operation's domain (n = 0, degenerate
    /// geometric base, zero affine scale, infeasible random request, ...).
    InvalidParameter(String),
    /// line_through was called with two identical points.
    IdenticalPoints,
    /// A pinned query named a point that is not in the point set.
    PointNotInSet,
    /// A scalar or set literal failed to parse.
    Parse(String),
    /// Underlying I/O failure (set files, report output).
    Io(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroDenominator => write!(f, "denominator is zero"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::MixedFields { left, right } => {
                write!(f, "mixed field tags: {left} vs {right}")
            }
            Error::SetTooSmall { required, actual } => {
                write!(f, "set too small: need at least {required} elements, got {actual}")
            }
            Error::CapExceeded { what, limit, requested } => {
                write!(f, "{what} cap exceeded: limit {limit}, requested {requested}")
            }
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::IdenticalPoints => write!(f, "the two points coincide"),
            Error::PointNotInSet => write!(f, "pinned point is not in the point set"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::Io(msg) => write!(f, "i/o error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
