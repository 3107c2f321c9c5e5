use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Float;

use super::{cis, pow_neg, riemann_zeta, PrecisionBudget, TAU};
use crate::error::{Error, Result};

/// Direct terms are summed until `r N >= |s| + BOOLE_MARGIN`, where `r` is
/// the distance of `theta` from `2 pi Z`.
const BOOLE_MARGIN: f64 = 50.0;
const MAX_BOOLE_TERMS: usize = 80;

/// `sum_{n >= start} e^{i n theta} n^{-s}` for any complex `s`.
///
/// The value is the analytic continuation in `s` when the series diverges.
/// Terms up to a split point `N` are added directly; the rest is handled by
/// Boole summation with the Taylor coefficients of `1 / (1 - x e^t)`,
/// `x = e^{i theta}`.
pub(crate) fn unit_circle_sum(
    s: Complex64,
    theta: f64,
    start: u64,
    budget: &PrecisionBudget,
) -> Result<Complex64> {
    if start == 0 {
        return Err(Error::domain("summation must start at n >= 1"));
    }
    let theta = theta.rem_euclid(TAU);
    let r = theta.min(TAU - theta);
    if r == 0.0 {
        let mut head = Complex64::new(0.0, 0.0);
        for n in 1..start {
            head += pow_neg(n as f64, s);
        }
        return Ok(riemann_zeta(s, budget)? - head);
    }

    let sigma = s.re;
    let split = (Float::ceil((s.norm() + BOOLE_MARGIN) / r) as u64).max(start);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut sum_sq = 0.0;
    let mut n = start;
    while n < split {
        if (n - start) as usize >= budget.max_terms {
            return Err(Error::Convergence {
                achieved: f64::INFINITY,
            });
        }
        let term = phase(n, theta) * pow_neg(n as f64, s);
        sum += term;
        sum_sq += term.norm_sqr();
        n += 1;
        if sigma > 1.0 && n > start + 8 {
            let nf = n as f64;
            let tail = Float::powf(nf - 1.0, 1.0 - sigma) / (sigma - 1.0);
            if tail <= 0.01 * budget.target * sum.norm() {
                return Ok(sum);
            }
        }
    }
    // Rounding in the direct sum behaves like a random walk over the terms.
    let noise = f64::EPSILON * (Float::sqrt(sum_sq) + sum.norm());
    let (tail, err) = boole_tail(s, theta, split, (budget.target * sum.norm()).min(noise));
    let total = sum + tail;
    let scale = total.norm().max(f64::MIN_POSITIVE);
    let achieved = err.max(noise) / scale;
    if achieved <= budget.target {
        Ok(total)
    } else {
        Err(Error::Convergence { achieved })
    }
}

/// `sum_{n >= N} x^n n^{-s} ~ x^N sum_k a_k (-1)^k (s)_k N^{-s-k}`.
///
/// Returns the truncated sum and the size of the last term kept. Summation
/// stops once a term drops below `tol` or the terms start growing.
fn boole_tail(s: Complex64, theta: f64, n: u64, tol: f64) -> (Complex64, f64) {
    let x = cis(theta);
    let a = boole_coefficients(x, MAX_BOOLE_TERMS);
    let nf = n as f64;
    let mut factor = phase(n, theta) * pow_neg(nf, s);
    let mut total = Complex64::new(0.0, 0.0);
    // Odd or even coefficients can vanish, so sizes are judged on pairs.
    let mut prev = f64::INFINITY;
    let mut last = f64::INFINITY;
    for (k, ak) in a.iter().enumerate() {
        let term = *ak * factor;
        let mag = term.norm();
        let env = if k == 0 { mag } else { mag.max(prev) };
        if k > 4 && env > last {
            break;
        }
        total += term;
        prev = mag;
        last = env;
        if k > 0 && env <= 0.01 * tol {
            break;
        }
        factor = -factor * (s + k as f64) / nf;
        if factor.norm() == 0.0 {
            last = 0.0;
            break;
        }
    }
    (total, last)
}

/// `e^{i n theta}` with the rounding error of `n * theta` compensated.
fn phase(n: u64, theta: f64) -> Complex64 {
    let nf = n as f64;
    let p = nf * theta;
    let e = Float::mul_add(nf, theta, -p);
    cis(p) * Complex64::new(1.0, e)
}

/// Taylor coefficients of `f(t) = 1 / (1 - x e^t)`, from `f' = f^2 - f`.
fn boole_coefficients(x: Complex64, count: usize) -> Vec<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    let mut a = Vec::with_capacity(count);
    a.push(one / (one - x));
    for k in 0..count - 1 {
        let mut conv = Complex64::new(0.0, 0.0);
        for i in 0..=k {
            conv += a[i] * a[k - i];
        }
        a.push((conv - a[k]) / (k as f64 + 1.0));
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::PI;

    fn b() -> PrecisionBudget {
        PrecisionBudget::with_target(1e-14)
    }

    // Negative s cancels in the direct sum; the default budget is the contract there.
    fn loose() -> PrecisionBudget {
        PrecisionBudget::default()
    }

    fn r(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn coefficients_match_closed_form() {
        // 1/(1 - x e^t) at x = -1 is 1/(1 + e^t) = 1/2 - t/4 + t^3/48 - ...
        let a = boole_coefficients(r(-1.0), 6);
        let want = [0.5, -0.25, 0.0, 1.0 / 48.0, 0.0, -1.0 / 480.0];
        for (got, w) in a.iter().zip(want) {
            assert!((got - r(w)).norm() < 1e-15);
        }
    }

    #[test]
    fn alternating_series() {
        // sum (-1)^n / n = -ln 2, sum (-1)^n / n^2 = -pi^2/12
        let v = unit_circle_sum(r(1.0), PI, 1, &b()).unwrap();
        assert!((v - r(-(2f64.ln()))).norm() < 1e-14);
        let v = unit_circle_sum(r(2.0), PI, 1, &b()).unwrap();
        assert!((v - r(-PI * PI / 12.0)).norm() < 1e-14);
    }

    #[test]
    fn continuation_at_negative_integers() {
        // Li_0(x) = x/(1-x), Li_{-1}(x) = x/(1-x)^2
        let one = r(1.0);
        for theta in [0.3, 1.0, PI / 2.0, 2.5, 5.9] {
            let x = cis(theta);
            let l0 = unit_circle_sum(r(0.0), theta, 1, &loose()).unwrap();
            assert!((l0 - x / (one - x)).norm() < 1e-12, "theta = {theta}");
            let lm1 = unit_circle_sum(r(-1.0), theta, 1, &loose()).unwrap();
            assert!(
                (lm1 - x / ((one - x) * (one - x))).norm() < 1e-11,
                "theta = {theta}"
            );
        }
    }

    #[test]
    fn clausen_value() {
        // Im sum e^{i n pi/3} / n^2 = Cl_2(pi/3) = 1.0149416064096536
        let v = unit_circle_sum(r(2.0), PI / 3.0, 1, &b()).unwrap();
        assert!((v.im - 1.014_941_606_409_653_6).abs() < 1e-14);
        // Re part: sum cos(n pi/3)/n^2 = pi^2/36
        assert!((v.re - PI * PI / 36.0).abs() < 1e-14);
    }

    #[test]
    fn start_offset() {
        let theta = 0.7;
        let full = unit_circle_sum(Complex64::new(-2.5, 1.0), theta, 1, &loose()).unwrap();
        let tail = unit_circle_sum(Complex64::new(-2.5, 1.0), theta, 2, &loose()).unwrap();
        let first = cis(theta);
        assert!((full - tail - first).norm() < 1e-12 * full.norm());
    }

    #[test]
    fn zero_angle_is_zeta() {
        let v = unit_circle_sum(r(2.0), 0.0, 2, &b()).unwrap();
        assert!((v.re - (PI * PI / 6.0 - 1.0)).abs() < 1e-14);
    }

    #[test]
    fn cancellation_reported() {
        // |Z(-40, x)| is far below the largest direct terms
        assert!(matches!(
            unit_circle_sum(r(-40.0), 2.2, 1, &loose()),
            Err(Error::Convergence { .. })
        ));
    }

    #[test]
    fn tiny_angle_exceeds_budget() {
        let tight = PrecisionBudget::new(1e-10, 100, 8).unwrap();
        assert!(matches!(
            unit_circle_sum(r(0.5), 1e-3, 1, &tight),
            Err(Error::Convergence { .. })
        ));
    }
}
