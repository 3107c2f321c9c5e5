//! Floating-point special-function kernel: Riemann and Hurwitz zeta, complex
//! log-gamma, Gauss–Legendre nodes and the unit-circle Dirichlet series used
//! by the polylogarithm.

mod gamma;
mod periodic;
mod quadrature;
mod zeta;

pub use gamma::{gamma, gamma_ratio_at_neg, log_gamma};
pub use quadrature::{gauss_legendre, GaussLegendre};
pub use zeta::{hurwitz_zeta, riemann_zeta};

pub(crate) use periodic::unit_circle_sum;
pub(crate) use zeta::{em_coeffs, euler_maclaurin};

use num_complex::Complex64;
use num_traits::Float;

use crate::error::{Error, Result};

/// Complex argument or value. Real inputs are `Complex64::new(x, 0.0)`.
pub type ComplexValue = Complex64;

pub(crate) const PI: f64 = core::f64::consts::PI;
pub(crate) const TAU: f64 = core::f64::consts::TAU;

/// Accuracy contract handed to every floating-point routine.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PrecisionBudget {
    /// Target relative error.
    pub target: f64,
    /// Cap on the number of explicit series terms.
    pub max_terms: usize,
    /// Minimum Euler–Maclaurin correction order (even).
    pub correction_order: usize,
}

impl Default for PrecisionBudget {
    fn default() -> Self {
        PrecisionBudget {
            target: 1e-10,
            max_terms: 10_000,
            correction_order: 8,
        }
    }
}

impl PrecisionBudget {
    pub fn new(target: f64, max_terms: usize, correction_order: usize) -> Result<Self> {
        if !(target > 0.0 && target.is_finite()) {
            return Err(Error::domain("precision target must be positive"));
        }
        if max_terms < 16 {
            return Err(Error::domain("max_terms must be at least 16"));
        }
        if correction_order < 2 || !correction_order.is_multiple_of(2) {
            return Err(Error::domain(
                "correction order must be even and at least 2",
            ));
        }
        Ok(PrecisionBudget {
            target,
            max_terms,
            correction_order,
        })
    }

    /// Default budget with a different target.
    pub fn with_target(target: f64) -> Self {
        PrecisionBudget {
            target,
            ..Default::default()
        }
    }

    /// Budget matching `digits` significant decimal digits.
    pub fn from_digits(digits: u32) -> Self {
        Self::with_target(Float::powi(10.0, -(digits as i32)))
    }
}

/// `sin(pi x)` with exact zeros at the integers.
pub(crate) fn sin_pi(x: f64) -> f64 {
    let r = x - 2.0 * Float::round(x / 2.0);
    if r == 0.0 || r == 1.0 || r == -1.0 {
        return 0.0;
    }
    if r == 0.5 {
        return 1.0;
    }
    if r == -0.5 {
        return -1.0;
    }
    Float::sin(PI * r)
}

/// `cos(pi x)` with exact zeros at half-integers.
pub(crate) fn cos_pi(x: f64) -> f64 {
    sin_pi(x + 0.5)
}

/// Complex `sin(pi z)`.
pub(crate) fn sin_pi_c(z: Complex64) -> Complex64 {
    let b = PI * z.im;
    Complex64::new(sin_pi(z.re) * Float::cosh(b), cos_pi(z.re) * Float::sinh(b))
}

/// `x^{-s}` for real `x > 0`.
#[inline]
pub(crate) fn pow_neg(x: f64, s: Complex64) -> Complex64 {
    let l = Float::ln(x);
    if s.im == 0.0 {
        return Complex64::new(Float::exp(-s.re * l), 0.0);
    }
    (-s * l).exp()
}

/// `e^{i theta}`.
#[inline]
pub(crate) fn cis(theta: f64) -> Complex64 {
    let (s, c) = Float::sin_cos(theta);
    Complex64::new(c, s)
}

/// True if `s` is real and equal to an integer.
pub(crate) fn as_integer(s: Complex64) -> Option<i64> {
    if s.im == 0.0 && Float::fract(s.re) == 0.0 && Float::abs(s.re) < 1e15 {
        Some(s.re as i64)
    } else {
        None
    }
}

/// Relative difference `|a - b| / max(|b|, floor)`.
pub fn rel_err(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm().max(1e-300)
}
