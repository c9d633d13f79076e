//! Error type shared across the crate.

use std::fmt;

/// Errors reported by numeric and arithmetic routines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument is outside the routine's domain.
    Domain(String),
    /// Evaluation at a pole of the function.
    Pole(String),
    /// A routine requiring a primitive character received an imprimitive one.
    Imprimitive { q: u64, index: usize },
    /// |L(1/2, chi)| is numerically zero, so the zeros factor is undefined.
    CentralZero { q: u64, index: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Pole(msg) => write!(f, "pole: {msg}"),
            Error::Imprimitive { q, index } => {
                write!(f, "character {index} mod {q} is not primitive")
            }
            Error::CentralZero { q, index } => write!(
                f,
                "central value of character {index} mod {q} is numerically zero"
            ),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
