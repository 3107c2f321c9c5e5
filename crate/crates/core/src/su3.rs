//! Witten zeta of SU(3).
//!
//! The irreducible representations are indexed by pairs `(m, n)` of positive
//! integers with degree `mn(m+n)/2`, so
//!
//! ```text
//! zeta_{SU(3)}(s) = 2^s sum_{m,n >= 1} m^{-s} n^{-s} (m+n)^{-s}.
//! ```
//!
//! The double series converges for `Re s > 2/3` but is only summed here for
//! `Re s > 1`; elsewhere the Mellin–Barnes formula
//!
//! ```text
//! 2^{-s} zeta_{SU(3)}(s) = Gamma(2s-1) Gamma(1-s) / Gamma(s) zeta(3s-1)
//!     + sum_{k<M} (-1)^k (s)_k / k! zeta(2s+k) zeta(s-k)
//!     + 1/(2 pi i) int_{Re z = M - eps} Gamma(s+z) Gamma(-z) / Gamma(s) zeta(2s+z) zeta(s-z) dz
//! ```
//!
//! continues it to the strip `-n - 1/2 + eps/2 < Re s < M + 1 - eps`, `M = 2n + 2`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Float, One, Zero};

use crate::error::{Error, Result};
use crate::exact::{factorial, rat, rising_factorial, zeta_neg_int};
use crate::numerics::{
    em_coeffs, euler_maclaurin, gauss_legendre, log_gamma, pow_neg, riemann_zeta, PrecisionBudget,
    PI,
};

/// Distance below which a point counts as sitting on a pole.
pub const POLE_DISTANCE: f64 = 1e-6;

// Rows summed explicitly before the asymptotic tail takes over.
const MT_ROWS: usize = 40;
// Within this distance of an integer the explicit terms are evaluated on a circle.
const CIRCLE_TRIGGER: f64 = 0.01;
const CIRCLE_RADIUS: f64 = 0.05;
const CIRCLE_POINTS: usize = 16;
const MAX_PANELS: usize = 4096;

/// Strip and contour parameters of the Mellin–Barnes continuation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MBParams {
    /// Strip selector; the finite sum has `M = 2n + 2` terms.
    pub n: u32,
    /// Offset of the contour `Re z = M - epsilon`, in `(0, 1)`.
    pub epsilon: f64,
    /// Contour truncation `|Im z| <= T`; `None` picks `40 + 10 |Im s|`.
    pub height: Option<f64>,
    /// Gauss–Legendre nodes per panel.
    pub order: usize,
}

impl Default for MBParams {
    fn default() -> Self {
        MBParams {
            n: 1,
            epsilon: 0.5,
            height: None,
            order: 16,
        }
    }
}

impl MBParams {
    pub fn new(n: u32, epsilon: f64) -> Result<Self> {
        let p = MBParams {
            n,
            epsilon,
            ..Default::default()
        };
        p.validate()?;
        Ok(p)
    }

    pub fn m(&self) -> u32 {
        2 * self.n + 2
    }

    /// `Re s` must exceed this.
    pub fn lower_bound(&self) -> f64 {
        -(self.n as f64) - 0.5 + self.epsilon / 2.0
    }

    /// `Re s` must stay below this, or the pole of `zeta(s - z)` crosses the contour.
    pub fn upper_bound(&self) -> f64 {
        self.m() as f64 + 1.0 - self.epsilon
    }

    fn abscissa(&self) -> f64 {
        self.m() as f64 - self.epsilon
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::domain("strip selector n must be positive"));
        }
        if !(self.epsilon > 0.0 && self.epsilon < 1.0) {
            return Err(Error::domain("epsilon must lie in (0, 1)"));
        }
        if let Some(t) = self.height {
            if !(t > 0.0 && t.is_finite()) {
                return Err(Error::domain("contour height must be positive"));
            }
        }
        if self.order < 2 {
            return Err(Error::domain("quadrature order must be at least 2"));
        }
        Ok(())
    }
}

/// Double series `2^s sum m^{-s} n^{-s} (m+n)^{-s}` for `Re s > 1`.
///
/// Uses the symmetry in `(m, n)`: the diagonal gives `2^{-s} zeta(3s)` and each
/// row `sum_{n > m}` is summed by Euler–Maclaurin. Rows beyond the first 40 are
/// summed through the asymptotic expansion of a row in powers of `1/m`, which
/// turns the outer tail into Hurwitz zeta values.
pub fn mt_series(s: Complex64, budget: &PrecisionBudget) -> Result<Complex64> {
    if s.re <= 1.0 {
        return Err(Error::domain("the double series needs Re s > 1"));
    }
    let diagonal = riemann_zeta(3.0 * s, budget)?;
    let mut rows = Complex64::zero();
    for m in 1..=MT_ROWS {
        rows += pow_neg(m as f64, s) * row_tail(s, m, budget)?;
    }
    rows += outer_tail(s, MT_ROWS, budget, rows.norm())?;
    let value = diagonal + 2.0 * (s * Float::ln(2.0)).exp() * rows;
    Ok(if s.im == 0.0 {
        Complex64::new(value.re, 0.0)
    } else {
        value
    })
}

/// `(s)_j / j!` for `j = 0..len`.
fn rising_over_factorial(s: Complex64, len: usize) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(len);
    let mut c = Complex64::one();
    for j in 0..len {
        out.push(c);
        c = c * (s + j as f64) / (j as f64 + 1.0);
    }
    out
}

/// `int_{x0}^inf x^{-s} (m+x)^{-s} dx`, via the substitution `u = x/(m+x)`.
fn row_integral(s: Complex64, m: f64, x0: f64) -> Complex64 {
    let r = m / (m + x0);
    let mut acc = Complex64::zero();
    let mut c = Complex64::one();
    let mut rj = 1.0;
    for j in 0..400 {
        let term = c * rj / (2.0 * s - 1.0 + j as f64);
        acc += term;
        if j > 4 && term.norm() <= 1e-18 * acc.norm() {
            break;
        }
        c = c * (s + j as f64) / (j as f64 + 1.0);
        rj *= r;
    }
    acc * pow_neg(m + x0, 2.0 * s - 1.0)
}

/// Derivatives `d^k/dx^k [x^{-s} (m+x)^{-s}]` at `x`, `k = 0..len`.
fn row_derivatives(s: Complex64, m: f64, x: f64, len: usize) -> Vec<Complex64> {
    let a = power_derivatives(s, x, len);
    let b = power_derivatives(s, m + x, len);
    let mut out = vec![Complex64::zero(); len];
    for (k, slot) in out.iter_mut().enumerate() {
        let mut binom = 1.0;
        for i in 0..=k {
            *slot += binom * a[i] * b[k - i];
            binom = binom * (k - i) as f64 / (i + 1) as f64;
        }
    }
    out
}

/// `d^k/dx^k x^{-s} = (-1)^k (s)_k x^{-s-k}` for `k = 0..len`.
fn power_derivatives(s: Complex64, x: f64, len: usize) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(len);
    let mut d = pow_neg(x, s);
    for k in 0..len {
        out.push(d);
        d = -d * (s + k as f64) / x;
    }
    out
}

/// `sum_{n > m} n^{-s} (m+n)^{-s}` by direct summation then Euler–Maclaurin.
fn row_tail(s: Complex64, m: usize, budget: &PrecisionBudget) -> Result<Complex64> {
    let coeffs = em_coeffs();
    let mf = m as f64;
    let mut direct_len = (Float::ceil(s.norm()) as usize + 8).max(16);
    loop {
        if direct_len > budget.max_terms {
            return Err(Error::Convergence {
                achieved: f64::INFINITY,
            });
        }
        let x0 = (m + 1 + direct_len) as f64;
        let mut acc = Complex64::zero();
        for n in (m + 1..m + 1 + direct_len).rev() {
            acc += pow_neg(n as f64, s) * pow_neg(n as f64 + mf, s);
        }
        let corrections = coeffs.len().min(20);
        let d = row_derivatives(s, mf, x0, 2 * corrections);
        acc += row_integral(s, mf, x0) + d[0] * 0.5;
        let mut prev = f64::INFINITY;
        for (j, c) in coeffs.iter().take(corrections).enumerate() {
            let term = d[2 * j + 1] * *c;
            let mag = term.norm();
            if mag > prev {
                break;
            }
            acc -= term;
            prev = mag;
            if mag <= 0.01 * budget.target * acc.norm() {
                return Ok(acc);
            }
        }
        direct_len *= 2;
    }
}

/// `sum_{m > rows} m^{-s} u(m)`, where the row sum has the expansion
/// `u(m) = I m^{1-2s} - G(1)/2 m^{-2s} - sum_j B_{2j}/(2j)! G^{(2j-1)}(1) m^{-2s-2j+1}`
/// with `G(x) = x^{-s} (1+x)^{-s}`.
fn outer_tail(
    s: Complex64,
    rows: usize,
    budget: &PrecisionBudget,
    scale: f64,
) -> Result<Complex64> {
    let a = rows as f64 + 1.0;
    let tol = 0.01 * budget.target * scale;
    let g = row_derivatives(s, 1.0, 1.0, 40);
    let integral = row_integral(s, 1.0, 1.0);
    let mut acc = integral * euler_maclaurin(3.0 * s - 1.0, a, budget)?;
    acc -= 0.5 * g[0] * euler_maclaurin(3.0 * s, a, budget)?;
    let mut prev = f64::INFINITY;
    for (j, c) in em_coeffs().iter().take(19).enumerate() {
        let k = 2 * j + 1;
        let term = g[k] * *c * euler_maclaurin(3.0 * s + k as f64, a, budget)?;
        let mag = term.norm();
        if mag > prev {
            break;
        }
        acc -= term;
        prev = mag;
        if mag <= tol {
            break;
        }
    }
    Ok(acc)
}

/// Analytic continuation of `zeta_{SU(3)}` through the Mellin–Barnes formula.
///
/// The explicit terms have canceling singularities at every integer; within
/// 0.01 of an integer the value is taken as the mean over a small circle,
/// which is exact for the holomorphic function. The genuine poles `2/3` and
/// `1/2 - k` raise [`Error::Pole`] within [`POLE_DISTANCE`].
pub fn witten_su3_continued(
    s: Complex64,
    params: MBParams,
    budget: &PrecisionBudget,
) -> Result<Complex64> {
    params.validate()?;
    let (lo, hi) = (params.lower_bound(), params.upper_bound());
    if s.re <= lo || s.re >= hi {
        return Err(Error::domain(alloc::format!(
            "Re s must lie in ({lo}, {hi}) for strip n = {}",
            params.n
        )));
    }
    let pole = nearest_pole(s);
    if (s - pole).norm() < POLE_DISTANCE {
        return Err(Error::Pole { at: pole });
    }
    let k = Float::round(s.re);
    let near_integer = (s - Complex64::new(k, 0.0)).norm();
    let value = if near_integer < CIRCLE_TRIGGER {
        let radius = CIRCLE_RADIUS
            .min(0.5 * (s.re - lo))
            .min(0.5 * (hi - s.re))
            .min(0.5 * (s - pole).norm());
        let mut acc = Complex64::zero();
        for j in 0..CIRCLE_POINTS {
            let phi = 2.0 * PI * (j as f64 + 0.5) / CIRCLE_POINTS as f64;
            let point = s + Complex64::from_polar(radius, phi);
            acc += mb_formula(point, &params, budget)?;
        }
        acc / CIRCLE_POINTS as f64
    } else {
        mb_formula(s, &params, budget)?
    };
    Ok(if s.im == 0.0 {
        Complex64::new(value.re, 0.0)
    } else {
        value
    })
}

/// Closest of the poles `2/3, 1/2, -1/2, -3/2, ...`.
fn nearest_pole(s: Complex64) -> Complex64 {
    let two_thirds = Complex64::new(2.0 / 3.0, 0.0);
    let half_k = Float::round(0.5 - s.re).max(0.0);
    let half = Complex64::new(0.5 - half_k, 0.0);
    if (s - two_thirds).norm() < (s - half).norm() {
        two_thirds
    } else {
        half
    }
}

fn mb_formula(s: Complex64, params: &MBParams, budget: &PrecisionBudget) -> Result<Complex64> {
    let one = Complex64::one();
    let lg_s = log_gamma(s)?;
    let first = (log_gamma(2.0 * s - 1.0)? + log_gamma(one - s)? - lg_s).exp()
        * riemann_zeta(3.0 * s - 1.0, budget)?;
    let mut finite = Complex64::zero();
    let coeffs = rising_over_factorial(s, params.m() as usize);
    for (k, c) in coeffs.iter().enumerate() {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let kf = k as f64;
        finite += sign * c * riemann_zeta(2.0 * s + kf, budget)? * riemann_zeta(s - kf, budget)?;
    }
    let explicit = first + finite;
    let integral = contour_integral(s, lg_s, params, budget, explicit.norm())?;
    Ok((s * Float::ln(2.0)).exp() * (explicit + integral))
}

/// `1/(2 pi i) int Gamma(s+z) Gamma(-z) / Gamma(s) zeta(2s+z) zeta(s-z) dz` on
/// `Re z = M - eps`, `|Im z| <= T`, by composite Gauss–Legendre with the panel
/// count doubled until two rules agree.
fn contour_integral(
    s: Complex64,
    lg_s: Complex64,
    params: &MBParams,
    budget: &PrecisionBudget,
    scale: f64,
) -> Result<Complex64> {
    let c = params.abscissa();
    let height = params.height.unwrap_or(40.0 + 10.0 * s.im.abs());
    let integrand = |t: f64| -> Result<Complex64> {
        let z = Complex64::new(c, t);
        let g = (log_gamma(s + z)? + log_gamma(-z)? - lg_s).exp();
        Ok(g * riemann_zeta(2.0 * s + z, budget)? * riemann_zeta(s - z, budget)?)
    };
    let rule = gauss_legendre(params.order);
    let mut panels = (Float::ceil(2.0 * height / 4.0) as usize).max(1);
    let mut previous: Option<Complex64> = None;
    let mut last_diff = f64::INFINITY;
    while panels <= MAX_PANELS {
        let width = 2.0 * height / panels as f64;
        let mut acc = Complex64::zero();
        for p in 0..panels {
            let mid = -height + (p as f64 + 0.5) * width;
            for (x, w) in rule.nodes.iter().zip(&rule.weights) {
                acc += integrand(mid + 0.5 * width * x)? * (w * 0.5 * width);
            }
        }
        let value = acc / (2.0 * PI);
        if let Some(prev) = previous {
            last_diff = (value - prev).norm();
            if last_diff <= budget.target * scale.max(value.norm()) {
                return Ok(value);
            }
        }
        previous = Some(value);
        panels *= 2;
    }
    Err(Error::Convergence {
        achieved: last_diff / scale.max(1e-300),
    })
}

fn pow2_neg(n: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << n as usize)
}

/// The three summands of the special-value identity at `s = -n`:
/// the `zeta(-3n-1)` term from the gamma ratio, the finite sum, and the
/// residue of `zeta(2s + 2n + 1)`.
pub fn special_value_su3_terms(n: u32) -> (BigRational, Vec<BigRational>, BigRational) {
    assert!(n >= 1, "special values are indexed from n = 1");
    let scale = pow2_neg(n);
    let nf = BigRational::from_integer(factorial(n));
    let big = BigRational::from_integer(factorial(2 * n + 1));
    let z3 = zeta_neg_int(3 * n as usize + 1);
    let sign = if n % 2 == 1 { rat(1) } else { rat(-1) };
    let first = &scale * sign * &nf * &nf / (rat(2) * &big) * &z3;
    let minus_n = rat(-(n as i64));
    let mut sum = Vec::with_capacity(2 * n as usize + 1);
    let mut k_fact = BigRational::one();
    for k in 0..=2 * n {
        if k > 0 {
            k_fact *= rat(k as i64);
        }
        let sign = if k % 2 == 0 { rat(1) } else { rat(-1) };
        let c = rising_factorial(&minus_n, k) / &k_fact;
        let zz = zeta_neg_int((2 * n - k) as usize) * zeta_neg_int((n + k) as usize);
        sum.push(&scale * sign * c * zz);
    }
    // (-n)(1-n)...(-1) * 1 * 2 ... n
    let product = rising_factorial(&minus_n, n) * rising_factorial(&rat(1), n);
    let third = -&scale * product / &big * BigRational::new(1.into(), 2.into()) * &z3;
    (first, sum, third)
}

/// `zeta_{SU(3)}(-n)`, exactly.
pub fn special_value_su3(n: u32) -> BigRational {
    let (first, sum, third) = special_value_su3_terms(n);
    sum.into_iter().fold(first + third, |acc, t| acc + t)
}

/// Both sides of the Bernoulli convolution identity for even `n`:
/// `sum_{k+l=n} zeta(-n-k) zeta(-n-l) / (k! l!)` and `n!/(2n+1)! zeta(-3n-1)`.
pub fn bernoulli_convolution_check(n: u32) -> Result<(BigRational, BigRational)> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::domain(
            "the convolution identity needs a positive even n",
        ));
    }
    let mut lhs = BigRational::zero();
    for k in 0..=n {
        let l = n - k;
        let den = BigRational::from_integer(factorial(k) * factorial(l));
        lhs += zeta_neg_int((n + k) as usize) * zeta_neg_int((n + l) as usize) / den;
    }
    let rhs = BigRational::from_integer(factorial(n))
        / BigRational::from_integer(factorial(2 * n + 1))
        * zeta_neg_int(3 * n as usize + 1);
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    fn b() -> PrecisionBudget {
        PrecisionBudget::default()
    }

    fn r(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    // compensated, so rounding stays far below the truncation error
    fn brute(s: f64, n: usize) -> f64 {
        let (mut acc, mut carry) = (0.0f64, 0.0f64);
        for m in 1..=n {
            let mf = m as f64;
            for k in 1..=n {
                let kf = k as f64;
                let y = (mf * kf * (mf + kf)).powf(-s) - carry;
                let t = acc + y;
                carry = (t - acc) - y;
                acc = t;
            }
        }
        acc * 2f64.powf(s)
    }

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn series_matches_brute_force() {
        // the square misses at most 2 zeta(s) sum_{n > N} n^{-2s} times 2^s
        let n = 2000;
        let direct = brute(2.0, n);
        let bound = 4.0 * 2.0 * 1.6449340668482264 * (n as f64).powi(-3) / 3.0;
        let v = mt_series(r(2.0), &b()).unwrap().re;
        assert!(
            v >= direct && v - direct <= bound + 1e-12,
            "{v} vs {direct}"
        );
        // Witten's volume formula gives 4 pi^6 / 2835 at s = 2
        assert!((v - 4.0 * PI.powi(6) / 2835.0).abs() < 1e-12);
    }

    #[test]
    fn series_basic_properties() {
        let v2 = mt_series(r(2.0), &b()).unwrap();
        let v3 = mt_series(r(3.0), &b()).unwrap();
        assert!(v3.re > 0.0 && v3.re < v2.re);
        assert!(v2.im.abs() < 1e-12);
        let direct = brute(3.0, 300);
        assert!((v3.re - direct).abs() < 1e-9);
        assert!(matches!(mt_series(r(1.0), &b()), Err(Error::Domain(_))));
        assert!(mt_series(r(0.5), &b()).is_err());
    }

    #[test]
    fn series_near_abscissa() {
        // at s = 1.2 the brute-force square converges like N^{-1.4}; compare extrapolated
        let s = 1.2;
        let v = mt_series(r(s), &b()).unwrap().re;
        let a = brute(s, 400);
        let c = brute(s, 800);
        // tail ~ C N^{1-2s}: Richardson with the leading exponent
        let q = 2f64.powf(2.0 * s - 1.0);
        let extrapolated = (q * c - a) / (q - 1.0);
        assert!((v - extrapolated).abs() / v < 1e-4, "{v} vs {extrapolated}");
    }

    #[test]
    fn triangle_and_square_agree() {
        let n = 400;
        let s = 2.0;
        let square = brute(s, n) / 4.0;
        let mut triangle = 0.0;
        for m in 1..=n {
            for k in m..=n {
                let w = if k == m { 1.0 } else { 2.0 };
                triangle += w * ((m * k * (m + k)) as f64).powf(-s);
            }
        }
        assert!((square - triangle).abs() < 1e-10);
    }

    #[test]
    fn complex_series() {
        let s = Complex64::new(2.0, 1.5);
        let v = mt_series(s, &b()).unwrap();
        let w = mt_series(s.conj(), &b()).unwrap();
        assert!(rel(v, w.conj()) < 1e-12);
        let mut direct = Complex64::zero();
        for m in 1..=600 {
            for k in 1..=600 {
                direct += pow_neg((m * k * (m + k)) as f64, s);
            }
        }
        direct *= (s * 2f64.ln()).exp();
        assert!(rel(v, direct) < 1e-6);
    }

    #[test]
    fn continuation_matches_series() {
        for s in [2.0, 3.0, 1.5] {
            let cont = witten_su3_continued(r(s), MBParams::default(), &b()).unwrap();
            let series = mt_series(r(s), &b()).unwrap();
            assert!(rel(cont, series) < 1e-8, "s = {s}: {cont} vs {series}");
        }
        let s = Complex64::new(1.7, 2.0);
        let cont = witten_su3_continued(s, MBParams::default(), &b()).unwrap();
        assert!(rel(cont, mt_series(s, &b()).unwrap()) < 1e-8);
    }

    #[test]
    fn strip_independence() {
        let p2 = MBParams::new(2, 0.5).unwrap();
        for s in [1.5, -0.4, 0.3] {
            let a = witten_su3_continued(r(s), MBParams::default(), &b()).unwrap();
            let c = witten_su3_continued(r(s), p2, &b()).unwrap();
            assert!(rel(a, c) < 1e-8, "s = {s}: {a} vs {c}");
        }
    }

    #[test]
    fn value_at_zero_and_trivial_zeros() {
        let v = witten_su3_continued(r(0.0), MBParams::default(), &b()).unwrap();
        assert!((v.re - 1.0 / 3.0).abs() < 1e-9, "{v}");
        let v = witten_su3_continued(r(-1.0), MBParams::default(), &b()).unwrap();
        assert!(v.norm() < 1e-9, "{v}");
        let p2 = MBParams::new(2, 0.5).unwrap();
        let v = witten_su3_continued(r(-2.0), p2, &b()).unwrap();
        assert!(v.norm() < 1e-9, "{v}");
    }

    #[test]
    fn genuine_poles() {
        let p = MBParams::default();
        assert!(matches!(
            witten_su3_continued(r(0.5), p, &b()),
            Err(Error::Pole { .. })
        ));
        assert!(matches!(
            witten_su3_continued(r(2.0 / 3.0), p, &b()),
            Err(Error::Pole { .. })
        ));
        assert!(matches!(
            witten_su3_continued(r(-0.5), p, &b()),
            Err(Error::Pole { .. })
        ));
        // simple poles: (s - s0) f(s) settles to a nonzero residue
        for s0 in [0.5, 2.0 / 3.0] {
            let res = |d: f64| witten_su3_continued(r(s0 + d), p, &b()).unwrap().re * d;
            let (a, c) = (res(1e-4), res(1e-5));
            assert!(
                c.abs() > 1e-2 && (a - c).abs() < 1e-2 * c.abs(),
                "{s0}: {a} {c}"
            );
        }
    }

    #[test]
    fn strip_violation() {
        let p = MBParams::default();
        assert!(matches!(
            witten_su3_continued(r(-1.3), p, &b()),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            witten_su3_continued(r(4.6), p, &b()),
            Err(Error::Domain(_))
        ));
        assert!(MBParams::new(0, 0.5).is_err());
        assert!(MBParams::new(1, 1.0).is_err());
        assert_eq!(MBParams::new(3, 0.5).unwrap().m(), 8);
    }

    #[test]
    fn special_values_vanish() {
        for n in 1..=8 {
            assert!(special_value_su3(n).is_zero(), "n = {n}");
        }
    }

    #[test]
    fn odd_special_values_vanish_termwise() {
        for n in [1u32, 3, 5, 7] {
            let (first, sum, third) = special_value_su3_terms(n);
            assert!(first.is_zero() && third.is_zero());
            assert!(sum.iter().all(|t| t.is_zero()), "n = {n}");
        }
        // for even n the pieces are individually nonzero
        let (first, _, third) = special_value_su3_terms(2);
        assert!(!first.is_zero() && !third.is_zero());
    }

    #[test]
    fn convolution_identity() {
        let (lhs, rhs) = bernoulli_convolution_check(2).unwrap();
        assert_eq!(lhs, ratio(1, 14400));
        assert_eq!(rhs, ratio(1, 14400));
        for n in (2..=12).step_by(2) {
            let (lhs, rhs) = bernoulli_convolution_check(n).unwrap();
            assert_eq!(lhs, rhs, "n = {n}");
            assert!(!lhs.is_zero());
        }
        assert!(bernoulli_convolution_check(3).is_err());
        assert!(bernoulli_convolution_check(0).is_err());
    }
}
