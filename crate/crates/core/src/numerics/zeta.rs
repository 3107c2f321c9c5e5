use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Float, Zero};
use spin::Once;

use super::{as_integer, log_gamma, pow_neg, sin_pi_c, unit_circle_sum, PrecisionBudget, PI, TAU};
use crate::error::{Error, Result};
use crate::exact::{bernoulli, binomial_int, factorial, to_f64};

/// Crossover between direct Euler–Maclaurin and the functional equation.
const SIGMA0: f64 = 0.5;
/// Below this real part the Hurwitz zeta switches to its Fourier expansion.
const HURWITZ_FOURIER_BELOW: f64 = 0.0;
const MAX_CORRECTIONS: usize = 40;
/// Hurwitz zeta at `-k` for `k` up to this bound uses Bernoulli polynomials.
const EXACT_NEG_MAX: i64 = 60;

static EM_COEFFS: Once<Vec<f64>> = Once::new();

/// `B_{2j} / (2j)!` for `j = 1..=MAX_CORRECTIONS`.
pub(crate) fn em_coeffs() -> &'static [f64] {
    EM_COEFFS.call_once(|| {
        (1..=MAX_CORRECTIONS)
            .map(|j| {
                let b = bernoulli(2 * j);
                to_f64(&(b / BigRational::from_integer(factorial(2 * j as u32))))
            })
            .collect()
    })
}

/// Riemann zeta function.
///
/// `Re s >= 1/2` goes through Euler–Maclaurin; the left half-plane uses
/// `zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s) zeta(1 - s)`.
pub fn riemann_zeta(s: Complex64, budget: &PrecisionBudget) -> Result<Complex64> {
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::pole_real(1.0));
    }
    if s == Complex64::new(0.0, 0.0) {
        return Ok(Complex64::new(-0.5, 0.0));
    }
    if s.re >= SIGMA0 {
        return euler_maclaurin(s, 1.0, budget);
    }
    let one = Complex64::new(1.0, 0.0);
    let reflected = euler_maclaurin(one - s, 1.0, budget)?;
    let log_factor = s * Float::ln(2.0) + (s - 1.0) * Float::ln(PI) + log_gamma(one - s)?;
    Ok(log_factor.exp() * sin_pi_c(s * 0.5) * reflected)
}

/// Hurwitz zeta function `zeta(s, a) = sum_{n >= 0} (n + a)^{-s}` for `0 < a <= 1`.
pub fn hurwitz_zeta(s: Complex64, a: f64, budget: &PrecisionBudget) -> Result<Complex64> {
    if !(a > 0.0 && a <= 1.0) {
        return Err(Error::domain("Hurwitz parameter must lie in (0, 1]"));
    }
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::pole_real(1.0));
    }
    if let Some(k) = as_integer(s).filter(|k| (-EXACT_NEG_MAX..=0).contains(k)) {
        return Ok(Complex64::new(hurwitz_neg_int((-k) as usize, a), 0.0));
    }
    if s.re >= HURWITZ_FOURIER_BELOW {
        return euler_maclaurin(s, a, budget);
    }
    if a == 1.0 {
        return riemann_zeta(s, budget);
    }
    // zeta(s, a) = Gamma(1-s) (2 pi)^{s-1}
    //   [e^{-i pi (1-s)/2} Li_{1-s}(e^{2 pi i a}) + e^{i pi (1-s)/2} Li_{1-s}(e^{-2 pi i a})]
    match hurwitz_fourier(s, a, budget) {
        Err(Error::Convergence { .. }) => euler_maclaurin(s, a, budget),
        other => other,
    }
}

/// Fourier expansion of the Hurwitz zeta, accurate in the left half-plane
/// where direct summation cancels badly.
fn hurwitz_fourier(s: Complex64, a: f64, budget: &PrecisionBudget) -> Result<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    let w = one - s;
    let theta = TAU * a;
    let plus = unit_circle_sum(w, theta, 1, budget)?;
    let minus = unit_circle_sum(w, TAU - theta, 1, budget)?;
    let i = Complex64::new(0.0, 1.0);
    let rot = (-i * PI * w * 0.5).exp();
    let rot_inv = (i * PI * w * 0.5).exp();
    let prefactor = (log_gamma(w)? - w * Float::ln(TAU)).exp();
    Ok(prefactor * (rot * plus + rot_inv * minus))
}

/// `zeta(-k, a) = -B_{k+1}(a) / (k + 1)`, evaluated in exact arithmetic at
/// the binary value of `a`.
fn hurwitz_neg_int(k: usize, a: f64) -> f64 {
    let m = k + 1;
    let a = BigRational::from_float(a).expect("finite Hurwitz parameter");
    let mut acc = BigRational::zero();
    for j in 0..=m {
        acc = acc * &a + bernoulli(j) * binomial_int(m as i64, j as u32);
    }
    -to_f64(&(acc / BigRational::from_integer(BigInt::from(m))))
}

/// Euler–Maclaurin summation for `sum_{n >= 0} (n + a)^{-s}`.
///
/// The split point starts at `max(16, |s| + 8)` and doubles until the
/// Bernoulli corrections shrink below the budget.
pub(crate) fn euler_maclaurin(s: Complex64, a: f64, budget: &PrecisionBudget) -> Result<Complex64> {
    let coeffs = em_coeffs();
    let min_corrections = (budget.correction_order / 2).max(1);
    let tol = budget.target * 0.1;
    let mut n_split = (Float::ceil(s.norm()) as usize + 8).max(16);
    let mut best_err = f64::INFINITY;
    loop {
        let mut direct = Complex64::new(0.0, 0.0);
        for n in (0..n_split).rev() {
            direct += pow_neg(n as f64 + a, s);
        }
        let x = n_split as f64 + a;
        let xs = pow_neg(x, s);
        let mut total = direct + x * xs / (s - 1.0) + xs * 0.5;
        let x2 = x * x;
        let mut t = s * xs / x;
        // A single correction can nearly vanish (s close to a negative
        // integer), so sizes are judged on consecutive pairs.
        let mut prev = f64::INFINITY;
        let mut last = f64::INFINITY;
        let mut converged = false;
        for (j, c) in coeffs.iter().enumerate() {
            let term = t * *c;
            let mag = term.norm();
            let env = if j == 0 { mag } else { mag.max(prev) };
            if j >= min_corrections && env > last {
                // asymptotic series started to diverge
                break;
            }
            total += term;
            prev = mag;
            last = env;
            if j >= min_corrections && env <= tol * total.norm() {
                converged = true;
                break;
            }
            let k = 2.0 * (j as f64 + 1.0);
            t = t * (s + (k - 1.0)) * (s + k) / x2;
            if t.norm() == 0.0 {
                converged = true;
                break;
            }
        }
        if converged || total.norm() == 0.0 {
            return Ok(total);
        }
        best_err = best_err.min(last / total.norm().max(1e-300));
        if best_err <= budget.target {
            return Ok(total);
        }
        n_split *= 2;
        if n_split > budget.max_terms {
            return Err(Error::Convergence { achieved: best_err });
        }
    }
}
