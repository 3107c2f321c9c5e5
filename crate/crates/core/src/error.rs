use alloc::string::String;
use core::fmt;

use num_complex::Complex64;

/// Errors raised by the evaluation routines.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// The function has a pole (or the representation used has one) at this point.
    Pole { at: Complex64 },
    /// Arguments outside the domain the routine accepts.
    Domain(String),
    /// A series or quadrature did not reach the requested accuracy.
    Convergence { achieved: f64 },
    /// The Jonquière linear solve is too ill-conditioned at this `s`.
    IllConditioned { determinant: f64 },
    /// Exact division by the zero polynomial or zero rational.
    DivisionByZero,
    /// A group-family parameter constraint (such as `p != 3`) was violated.
    Constraint(String),
    /// Numerator and denominator vanish to different orders at `p = 1`.
    DegenerateLimit {
        numerator_zeros: usize,
        denominator_zeros: usize,
    },
}

pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn pole_real(at: f64) -> Self {
        Error::Pole {
            at: Complex64::new(at, 0.0),
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Pole { at } if at.im == 0.0 => write!(f, "pole at s = {}", at.re),
            Error::Pole { at } => write!(f, "pole at s = {}{:+}i", at.re, at.im),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Convergence { achieved } => {
                write!(f, "failed to converge (achieved relative error {achieved:e})")
            }
            Error::IllConditioned { determinant } => {
                write!(f, "ill-conditioned functional-equation solve (|det| = {determinant:e})")
            }
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::Constraint(msg) => write!(f, "parameter constraint violated: {msg}"),
            Error::DegenerateLimit { numerator_zeros, denominator_zeros } => write!(
                f,
                "degenerate p -> 1 limit: {numerator_zeros} vanishing numerator factors vs {denominator_zeros} in the denominator"
            ),
        }
    }
}

impl core::error::Error for Error {}
