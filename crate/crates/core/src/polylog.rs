//! The polylogarithm on the unit circle, `Z(s, x) = sum_{n >= 1} x^n n^{-s}`
//! with `x = e^{i theta}`.
//!
//! Three evaluation routes are offered: the series itself (with a Boole tail,
//! so it converges for `Re s > 0` off `x = 1`), the recursion
//!
//! ```text
//! (1 - x) Z(s, x) = x + x^2 (2^{-s} - 1) + x sum_{k >= 1} C(-s, k) (Z(s + k, x) - x)
//! ```
//!
//! which continues `Z` to all of `C`, and for real `s` the Jonquière relation
//! with the Hurwitz zeta. At `s = -m` the value is the rational function
//! returned by [`polylog_closed_form`].

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::{Float, Zero};
use spin::Mutex;

use crate::error::{Error, Result};
use crate::exact::{binomial_int, Polynomial, RationalFunction, Var};
use crate::numerics::{
    as_integer, cos_pi, hurwitz_zeta, log_gamma, pow_neg, riemann_zeta, sin_pi, unit_circle_sum,
    PrecisionBudget, PI, TAU,
};

/// Cap on the number of binomial terms per recursion level.
pub const MAX_RECURSION_TERMS: usize = 64;
/// Below this `|sin(pi s/2) cos(pi s/2)|` the Jonquière solve is refused.
const JONQUIERE_MIN_DET: f64 = 1e-8;

/// A point `e^{i theta}` on the unit circle, stored by its angle in `[0, 2 pi)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnitCirclePoint {
    theta: f64,
    // min(theta, 2 pi - theta), computed once so that x and 1/x share it exactly
    mirror: f64,
}

impl UnitCirclePoint {
    pub fn new(theta: f64) -> Result<Self> {
        if !theta.is_finite() {
            return Err(Error::domain("angle must be finite"));
        }
        let mut t = theta.rem_euclid(TAU);
        if t >= TAU {
            t = 0.0;
        }
        let mirror = if t > PI { TAU - t } else { t };
        Ok(UnitCirclePoint { theta: t, mirror })
    }

    /// `e^{i pi num / den}`, reduced exactly before converting to radians.
    pub fn from_pi_fraction(num: i64, den: i64) -> Result<Self> {
        if den <= 0 {
            return Err(Error::domain(
                "denominator of a multiple of pi must be positive",
            ));
        }
        let r = num.rem_euclid(2 * den);
        Ok(UnitCirclePoint {
            theta: PI * (r as f64) / (den as f64),
            mirror: PI * (r.min(2 * den - r) as f64) / (den as f64),
        })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn is_one(&self) -> bool {
        self.theta == 0.0
    }

    pub fn point(&self) -> Complex64 {
        if self.theta == PI {
            return Complex64::new(-1.0, 0.0);
        }
        Complex64::from_polar(1.0, self.theta)
    }

    /// `x^{-1} = e^{-i theta}`.
    pub fn inverse(&self) -> Self {
        if self.theta == 0.0 {
            *self
        } else {
            UnitCirclePoint {
                theta: TAU - self.theta,
                mirror: self.mirror,
            }
        }
    }
}

/// `Z(s, x)` by direct summation.
///
/// Needs `Re s > 1`, or `Re s > 0` with `x != 1`.
pub fn polylog_series(
    s: Complex64,
    x: UnitCirclePoint,
    budget: &PrecisionBudget,
) -> Result<Complex64> {
    if x.is_one() {
        if s.re > 1.0 {
            return riemann_zeta(s, budget);
        }
        return Err(Error::domain("series diverges at x = 1 for Re s <= 1"));
    }
    if s.re <= 0.0 {
        return Err(Error::domain("series diverges for Re s <= 0"));
    }
    unit_circle_sum(s, x.theta, 1, budget)
}

/// `Z(s, x)` for any complex `s` by the shift recursion.
///
/// Levels with `Re(s + j) >= 3/2` come from the series; lower levels are
/// built from higher ones, each using at most [`MAX_RECURSION_TERMS`]
/// binomial terms.
pub fn polylog_continued(
    s: Complex64,
    x: UnitCirclePoint,
    budget: &PrecisionBudget,
) -> Result<Complex64> {
    if x.is_one() {
        return Err(Error::domain("continuation needs x != 1"));
    }
    let depth = Float::ceil(1.5 - s.re).max(0.0) as usize;
    if depth == 0 {
        return unit_circle_sum(s, x.theta, 1, budget);
    }
    let xp = x.point();
    let one = Complex64::new(1.0, 0.0);
    let tol = 0.01 * budget.target;
    // w[i] = Z(s + i, x) - x, filled on demand from the top down.
    let mut w: Vec<Option<Complex64>> = vec![None; depth + MAX_RECURSION_TERMS + 1];
    let series =
        |i: usize| -> Result<Complex64> { unit_circle_sum(s + i as f64, x.theta, 2, budget) };
    let mut value = Complex64::zero();
    for j in (0..depth).rev() {
        let sj = s + j as f64;
        let neg = -sj;
        let integer = as_integer(neg).filter(|m| *m >= 0);
        let mut acc = Complex64::zero();
        let mut coeff = one;
        let mut done = false;
        for k in 1..=MAX_RECURSION_TERMS {
            // C(-s_j, k) = C(-s_j, k-1) (-s_j - k + 1) / k
            coeff = coeff * (neg - (k as f64 - 1.0)) / k as f64;
            if coeff.is_zero() {
                done = true;
                break;
            }
            let idx = j + k;
            let wk = match w[idx] {
                Some(v) => v,
                None => {
                    let v = series(idx)?;
                    w[idx] = Some(v);
                    v
                }
            };
            acc += coeff * wk;
            if integer.is_some_and(|m| k as i64 >= m) {
                done = true;
                break;
            }
            let sigma = sj.re + k as f64;
            if sigma > 1.5 {
                let bound = coeff.norm() * Float::powf(2.0, -sigma) * (1.0 + 2.0 / (sigma - 1.0));
                if bound <= tol * acc.norm().max(f64::MIN_POSITIVE) {
                    done = true;
                    break;
                }
            }
        }
        if !done {
            return Err(Error::Convergence { achieved: f64::NAN });
        }
        let two_pow = pow_neg(2.0, sj);
        value = (xp + xp * xp * (two_pow - 1.0) + xp * acc) / (one - xp);
        w[j] = Some(value - xp);
    }
    Ok(value)
}

/// `Z(s, x)` for real `s` from the Jonquière relation
/// `e^{-i pi s/2} Z(s, x) + e^{i pi s/2} Z(s, 1/x) = (2 pi)^s / Gamma(s) zeta(1 - s, theta / 2 pi)`
/// applied at `theta` and `2 pi - theta`, with `Z(s, 1/x) = conj Z(s, x)`.
///
/// Positive integers and `s = 0` make the 2x2 system singular and are
/// reported as [`Error::IllConditioned`]. Negative integers are taken as a
/// limit.
pub fn polylog_via_jonquiere(
    s: f64,
    x: UnitCirclePoint,
    budget: &PrecisionBudget,
) -> Result<Complex64> {
    if x.is_one() {
        return Err(Error::domain("Jonquière relation needs x != 1"));
    }
    let sin = sin_pi(s / 2.0);
    let cos = cos_pi(s / 2.0);
    let negative_integer = as_integer(Complex64::new(s, 0.0)).filter(|m| *m < 0);
    let det = sin * cos;
    if negative_integer.is_none() && det.abs() < JONQUIERE_MIN_DET {
        return Err(Error::IllConditioned { determinant: det });
    }
    let t1 = x.theta / TAU;
    let t2 = 1.0 - t1;
    let h1 = hurwitz_zeta(Complex64::new(1.0 - s, 0.0), t1, budget)?.re;
    let h2 = hurwitz_zeta(Complex64::new(1.0 - s, 0.0), t2, budget)?.re;
    let two_pi_s = Float::powf(TAU, s);

    if let Some(m) = negative_integer {
        // 1/Gamma(s) ~ (-1)^m m! (s + m); one of sin, cos vanishes to first order.
        let m = (-m) as u32;
        let mut fact = 1.0;
        for i in 2..=m {
            fact *= i as f64;
        }
        let slope = if m.is_multiple_of(2) { fact } else { -fact };
        let (d_sin, d_cos) = (PI / 2.0 * cos, -PI / 2.0 * sin);
        let (u, v) = if sin == 0.0 {
            (0.0, two_pi_s * slope * (h1 - h2) / (4.0 * d_sin))
        } else {
            (two_pi_s * slope * (h1 + h2) / (4.0 * d_cos), 0.0)
        };
        return Ok(Complex64::new(u, v));
    }

    let lg = log_gamma(Complex64::new(s, 0.0))?;
    // Gamma(s) < 0 shows up as an imaginary part pi in log Gamma.
    let inv_gamma = (-lg).exp().re;
    let r1 = two_pi_s * inv_gamma * h1;
    let r2 = two_pi_s * inv_gamma * h2;
    Ok(Complex64::new(
        (r1 + r2) / (4.0 * cos),
        (r1 - r2) / (4.0 * sin),
    ))
}

/// Numerators `N_m` with `Z(-m, x) = N_m(x) / (1 - x)^{m+1}`.
static NUMERATORS: Mutex<Vec<Polynomial>> = Mutex::new(Vec::new());

/// Exact `Z(-m, x)` as a rational function of `x`.
///
/// Clearing `(1 - x)^{m+1}` from
/// `(1 - x) Z(-m, x) = x + x^2 (2^m - 1) + x sum_{k=1}^m C(m, k) (Z(k - m, x) - x)`
/// leaves `N_m = x (1 - x)^m + x sum_{k=1}^m C(m, k) N_{m-k} (1 - x)^{k-1}`.
pub fn polylog_closed_form(m: usize) -> RationalFunction {
    let one_minus_x = Polynomial::from_ints(Var::X, &[1, -1]);
    let x = Polynomial::var(Var::X);
    let mut cache = NUMERATORS.lock();
    while cache.len() <= m {
        let n = cache.len();
        let mut acc = one_minus_x.pow(n as u32);
        let mut power = Polynomial::one(Var::X);
        for k in 1..=n {
            acc = &acc + &(&cache[n - k] * &power).scale(&binomial_int(n as i64, k as u32));
            power = &power * &one_minus_x;
        }
        cache.push(&x * &acc);
    }
    // N_m(1) is an Eulerian-number sum, so numerator and denominator are coprime.
    RationalFunction::from_coprime(cache[m].clone(), one_minus_x.pow(m as u32 + 1))
}

/// `Z(-m, e^{i theta})` from the closed form, evaluated symmetrically in
/// half angles: with the denominator `(x - 1)^{m+1} = x^{(m+1)/2} (2 i sin(theta/2))^{m+1}`
/// the numerator becomes a trigonometric sum. For `m = 1` the result is
/// exactly `-1 / (4 sin^2(theta/2))`.
pub fn polylog_eval_neg(m: usize, x: UnitCirclePoint) -> Result<Complex64> {
    if x.is_one() {
        return Err(Error::Pole {
            at: Complex64::new(1.0, 0.0),
        });
    }
    let r = polylog_closed_form(m);
    let num = r.numer();
    let den = r.denom();
    // den is the monic (x - 1)^{m+1}; any leftover constant is folded into the numerator.
    debug_assert_eq!(den.degree(), Some(m + 1));
    let half = (m as f64 + 1.0) / 2.0;
    // Work at the representative angle in (0, pi]; Z(-m, 1/x) = conj Z(-m, x).
    let upper = x.theta > PI;
    let theta = x.mirror;
    let mut top = Complex64::zero();
    for (i, c) in num.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let e = i as f64 - half;
        let cf = crate::exact::to_f64(c);
        if e == 0.0 {
            top += cf;
        } else {
            top += Complex64::from_polar(cf, e * theta);
        }
    }
    let sin_half = Float::sin(theta / 2.0);
    let bottom = Float::powi(2.0 * sin_half, (m + 1) as i32);
    let i_pow = match (m + 1) % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    };
    let mut value = top / (i_pow * bottom);
    // For m >= 1 the numerator is palindromic about `half`, so `top` is real
    // and the value is real (odd m) or imaginary (even m).
    if m % 2 == 1 {
        value.im = 0.0;
    } else if m > 0 {
        value.re = 0.0;
    }
    if theta == PI {
        // x = -1 = 1/x
        value.im = 0.0;
    }
    Ok(if upper { value.conj() } else { value })
}
