//! Witten L-function of SU(2).
//!
//! The irreducible representations are `Sym^{n-1}`, `n >= 1`, of degree `n`.
//! For `g` conjugate to `diag(e^{i theta}, e^{-i theta})`, `0 <= theta <= pi`,
//!
//! ```text
//! zeta(s, g) = sum_{n >= 1} sin(n theta) / (n sin theta) n^{-s}
//!            = (Z(s+1, e^{i theta}) - Z(s+1, e^{-i theta})) / (2 i sin theta)
//! ```
//!
//! which reduces to the Riemann zeta at `theta = 0` and to the alternating
//! zeta `(1 - 2^{1-s}) zeta(s)` at `theta = pi`.

use alloc::vec::Vec;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Float, Zero};

use crate::error::{Error, Result};
use crate::exact::rat;
use crate::numerics::{
    as_integer, gauss_legendre, hurwitz_zeta, pow_neg, riemann_zeta, PrecisionBudget, PI, TAU,
};
use crate::polylog::{polylog_continued, polylog_eval_neg, UnitCirclePoint};

/// Conjugacy class of `diag(e^{i theta}, e^{-i theta})`, `0 <= theta <= pi`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConjugacyClassSU2 {
    theta: f64,
}

impl ConjugacyClassSU2 {
    pub fn new(theta: f64) -> Result<Self> {
        if !(0.0..=PI).contains(&theta) {
            return Err(Error::domain("SU(2) class angle must lie in [0, pi]"));
        }
        Ok(ConjugacyClassSU2 { theta })
    }

    /// Class of angle `pi num / den`.
    pub fn from_pi_fraction(num: i64, den: i64) -> Result<Self> {
        if den <= 0 || num < 0 || num > den {
            return Err(Error::domain("SU(2) class angle must lie in [0, pi]"));
        }
        if num == den {
            return Ok(Self::minus_identity());
        }
        Self::new(PI * num as f64 / den as f64)
    }

    pub fn identity() -> Self {
        ConjugacyClassSU2 { theta: 0.0 }
    }

    pub fn minus_identity() -> Self {
        ConjugacyClassSU2 { theta: PI }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// `0 < theta < pi`.
    pub fn is_regular(&self) -> bool {
        self.theta > 0.0 && self.theta < PI
    }

    /// `+1` for the identity, `-1` for `-I`, `None` for regular classes.
    pub fn central_sign(&self) -> Option<f64> {
        if self.theta == 0.0 {
            Some(1.0)
        } else if self.theta == PI {
            Some(-1.0)
        } else {
            None
        }
    }
}

/// `sin(n theta) / (n sin theta)`, the normalized character of `Sym^{n-1}`.
pub fn char_ratio(n: u64, g: ConjugacyClassSU2) -> Result<f64> {
    if n == 0 {
        return Err(Error::domain("representation index starts at 1"));
    }
    match g.central_sign() {
        Some(c) => Ok(if c > 0.0 || n % 2 == 1 { 1.0 } else { -1.0 }),
        None => {
            let t = g.theta;
            Ok(Float::sin(n as f64 * t) / (n as f64 * Float::sin(t)))
        }
    }
}

/// `zeta^W_{SU(2)}(s, g)`.
///
/// At `theta = pi`, `s = 1` the alternating series converges to `ln 2`,
/// which is returned instead of a pole.
pub fn witten_l_su2(
    s: Complex64,
    g: ConjugacyClassSU2,
    budget: &PrecisionBudget,
) -> Result<Complex64> {
    match g.central_sign() {
        Some(c) if c > 0.0 => riemann_zeta(s, budget),
        Some(_) => {
            if s == Complex64::new(1.0, 0.0) {
                return Ok(Complex64::new(Float::ln(2.0), 0.0));
            }
            let one = Complex64::new(1.0, 0.0);
            let factor = one - pow_neg(2.0, s - 1.0);
            Ok(factor * riemann_zeta(s, budget)?)
        }
        None => {
            let x = UnitCirclePoint::new(g.theta)?;
            let sin = Float::sin(g.theta);
            if let Some(m) = as_integer(s + 1.0).filter(|k| *k <= 0 && *k >= -200) {
                // closed form; the value is Im Z(-m, x) / sin(theta)
                let z = polylog_eval_neg((-m) as usize, x)?;
                return Ok(Complex64::new(z.im / sin, 0.0));
            }
            let z = polylog_continued(s + 1.0, x, budget)?;
            if s.im == 0.0 {
                return Ok(Complex64::new(z.im / sin, 0.0));
            }
            let zc = polylog_continued(s + 1.0, x.inverse(), budget)?;
            Ok((z - zc) / Complex64::new(0.0, 2.0 * sin))
        }
    }
}

/// Why `zeta^W_{SU(2)}(-m, g)` vanishes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VanishingReason {
    /// `theta` is `0` or `pi` and `zeta(-m) = 0`.
    TrivialZero,
    /// `0 < theta < pi` and `Z(1-m, x) = Z(1-m, 1/x)` for even `m`.
    PolylogParity,
}

/// Exact special value at a negative even integer, with the reason it is zero.
pub fn special_value_neg_even(
    m: u32,
    g: ConjugacyClassSU2,
) -> Result<(BigRational, VanishingReason)> {
    if m == 0 || !m.is_multiple_of(2) {
        return Err(Error::domain("m must be a positive even integer"));
    }
    let reason = if g.is_regular() {
        VanishingReason::PolylogParity
    } else {
        VanishingReason::TrivialZero
    };
    Ok((rat(0), reason))
}

/// `d/ds zeta^W_{SU(2)}(s, g)` at `s = -2`.
///
/// For regular `g` this is `(zeta(2, theta/2pi) - pi^2 / (2 sin^2(theta/2))) / (4 pi sin theta)`.
pub fn derivative_at_minus2(g: ConjugacyClassSU2, budget: &PrecisionBudget) -> Result<f64> {
    let zeta3 = riemann_zeta(Complex64::new(3.0, 0.0), budget)?.re;
    match g.central_sign() {
        Some(c) if c > 0.0 => Ok(-zeta3 / (4.0 * PI * PI)),
        Some(_) => Ok(7.0 * zeta3 / (4.0 * PI * PI)),
        None => {
            let t = g.theta;
            let h = hurwitz_zeta(Complex64::new(2.0, 0.0), t / TAU, budget)?.re;
            let half = Float::sin(t / 2.0);
            Ok((h - PI * PI / (2.0 * half * half)) / (4.0 * PI * Float::sin(t)))
        }
    }
}

/// `zeta^W_{SU(2)}(s; g_1, ..., g_r) = sum_n prod_i chi_n(g_i) n^{-s-r}` for `r <= 3`.
///
/// Each regular `g_i` contributes `(x_i^n - x_i^{-n}) / (x_i - x_i^{-1})`, and
/// a central `c I` contributes `c^{n-1} n`. Expanding the product gives signed
/// polylogarithms `Z(s + r - k, e^{i phi})`, `k` the number of central
/// elements; a term with `phi = 0 mod 2 pi` is a Riemann zeta value.
pub fn multi_l(
    s: Complex64,
    gs: &[ConjugacyClassSU2],
    budget: &PrecisionBudget,
) -> Result<Complex64> {
    if gs.is_empty() || gs.len() > 3 {
        return Err(Error::domain(
            "multi-character L-function takes 1 to 3 classes",
        ));
    }
    let r = gs.len();
    let mut regular: Vec<f64> = Vec::new();
    let mut central_phase = 0.0;
    let mut central_sign = 1.0;
    let mut k = 0usize;
    for g in gs {
        match g.central_sign() {
            Some(c) => {
                k += 1;
                central_sign *= c;
                if c < 0.0 {
                    central_phase += PI;
                }
            }
            None => regular.push(g.theta),
        }
    }
    let order = s + (r - k) as f64;
    // c^{n-1} = c^n / c; the 1/c factors multiply to central_sign
    let mut prefactor = Complex64::new(central_sign, 0.0);
    for &t in &regular {
        prefactor /= Complex64::new(0.0, 2.0 * Float::sin(t));
    }
    // Terms are grouped by reduced angle so conjugate pairs are evaluated once.
    let mut terms: Vec<(f64, f64)> = Vec::new();
    for mask in 0..(1u32 << regular.len()) {
        let mut phi = central_phase;
        let mut sign = 1.0;
        for (i, &t) in regular.iter().enumerate() {
            if mask & (1 << i) == 0 {
                phi += t;
            } else {
                phi -= t;
                sign = -sign;
            }
        }
        terms.push((phi, sign));
    }
    let mut acc = Complex64::zero();
    for (phi, sign) in terms {
        acc += sign * signed_polylog(order, phi, budget)?;
    }
    let value = prefactor * acc;
    Ok(if s.im == 0.0 {
        Complex64::new(value.re, 0.0)
    } else {
        value
    })
}

/// `Z(order, e^{i phi})`, with `phi = 0 mod 2 pi` sent to the Riemann zeta.
fn signed_polylog(order: Complex64, phi: f64, budget: &PrecisionBudget) -> Result<Complex64> {
    let reduced = phi.rem_euclid(TAU);
    // phi is a signed sum of at most three stored angles; snap its rounding residue
    let near_zero = reduced.min(TAU - reduced) < 64.0 * f64::EPSILON * (1.0 + phi.abs());
    if near_zero {
        if order == Complex64::new(1.0, 0.0) {
            return Err(Error::Pole { at: order });
        }
        return riemann_zeta(order, budget);
    }
    let x = UnitCirclePoint::new(reduced)?;
    if let Some(m) = as_integer(order).filter(|k| *k <= 0 && *k >= -200) {
        return polylog_eval_neg((-m) as usize, x);
    }
    polylog_continued(order, x, budget)
}

/// Haar average `int_0^pi zeta(s, theta) (2/pi) sin^2(theta) d theta` for real `s`.
///
/// Gauss–Legendre with 64 nodes, doubled until two rules agree to the budget.
/// At `s = -1` the integrand is the closed form `(2/pi) cos^2(theta/2)`.
pub fn haar_average_su2(s: f64, budget: &PrecisionBudget) -> Result<f64> {
    let integrand = |theta: f64| -> Result<f64> {
        if s == -1.0 {
            let c = Float::cos(theta / 2.0);
            return Ok(2.0 / PI * c * c);
        }
        let g = ConjugacyClassSU2::new(theta)?;
        let v = witten_l_su2(Complex64::new(s, 0.0), g, budget)?.re;
        let st = Float::sin(theta);
        Ok(v * 2.0 / PI * st * st)
    };
    let mut nodes = 64;
    let mut previous: Option<f64> = None;
    let mut last_diff = f64::INFINITY;
    while nodes <= 1024 {
        let rule = gauss_legendre(nodes);
        let half = PI / 2.0;
        let mut acc = 0.0;
        for (x, w) in rule.nodes.iter().zip(&rule.weights) {
            acc += w * integrand(half + half * x)?;
        }
        let value = acc * half;
        if let Some(p) = previous {
            last_diff = Float::abs(value - p);
            if last_diff <= budget.target * Float::abs(value).max(1.0) {
                return Ok(value);
            }
        }
        previous = Some(value);
        nodes *= 2;
    }
    Err(Error::Convergence {
        achieved: last_diff,
    })
}
