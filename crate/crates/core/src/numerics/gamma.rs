use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Float, One};

use super::{as_integer, PI};
use crate::error::{Error, Result};
use crate::exact::factorial;

// B_{2k} / (2k (2k-1)) for k = 1..=12.
const STIRLING: [f64; 12] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
    77683.0 / 5796.0,
    -236364091.0 / 1506960.0,
];

const SHIFT_TO: f64 = 15.0;

/// Principal branch of `log Gamma(z)`.
///
/// The result is the analytic continuation that is real on the positive real
/// axis, with the branch cut along the negative real axis. Arguments with
/// `Re z < 15` are shifted up by the recurrence before the Stirling series is
/// applied.
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if let Some(k) = as_integer(z) {
        if k <= 0 {
            return Err(Error::pole_real(k as f64));
        }
    }
    let mut shift = Complex64::new(0.0, 0.0);
    let mut w = z;
    while w.re < SHIFT_TO {
        shift += w.ln();
        w += 1.0;
    }
    Ok(stirling(w) - shift)
}

fn stirling(z: Complex64) -> Complex64 {
    let half_ln_2pi = 0.5 * Float::ln(2.0 * PI);
    let mut acc = (z - 0.5) * z.ln() - z + half_ln_2pi;
    let zinv = z.inv();
    let z2inv = zinv * zinv;
    let mut p = zinv;
    for c in STIRLING {
        let term = p * c;
        acc += term;
        if term.norm() < 1e-18 * acc.norm() {
            break;
        }
        p *= z2inv;
    }
    acc
}

/// `Gamma(z)`, via `exp(log_gamma(z))`.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    Ok(log_gamma(z)?.exp())
}

/// Exact value of `lim_{s -> -n} Gamma(2s - 1) / Gamma(s)` for `n >= 1`.
///
/// Near a non-positive integer `-k`, `Gamma(-k + e) ~ (-1)^k / (k! e)`. With
/// `s = -n + e`, `2s - 1 = -(2n+1) + 2e`, so the ratio tends to
/// `res(2n+1) / (2 res(n))` where `res(k) = (-1)^k / k!`.
pub fn gamma_ratio_at_neg(n: u32) -> BigRational {
    assert!(n >= 1, "gamma_ratio_at_neg needs n >= 1");
    let residue = |k: u32| {
        let sign = if k.is_multiple_of(2) {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        BigRational::new(sign, factorial(k))
    };
    residue(2 * n + 1) / (residue(n) * BigRational::from_integer(BigInt::from(2)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{ratio, to_f64};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn real_values() {
        assert!(log_gamma(c(1.0, 0.0)).unwrap().norm() < 1e-15);
        assert!(log_gamma(c(2.0, 0.0)).unwrap().norm() < 1e-15);
        let half = log_gamma(c(0.5, 0.0)).unwrap();
        assert!((half.re - 0.5 * PI.ln()).abs() < 1e-14);
        let five = log_gamma(c(5.0, 0.0)).unwrap();
        assert!((five.re - 24f64.ln()).abs() < 1e-14 * 24f64.ln());
        let big = log_gamma(c(100.0, 0.0)).unwrap();
        // ln(99!) = 359.13420536957539878...
        assert!((big.re - 359.134_205_369_575_4).abs() < 1e-12 * 359.0);
    }

    #[test]
    fn poles_rejected() {
        for k in [0.0, -1.0, -7.0] {
            assert!(matches!(log_gamma(c(k, 0.0)), Err(Error::Pole { .. })));
        }
    }

    #[test]
    fn recurrence_on_grid() {
        for re in [-12.3, -3.5, -0.5, 0.25, 1.0, 4.7, 30.2] {
            for im in [-25.0, -3.0, 0.5, 10.0] {
                let z = c(re, im);
                let ratio = (log_gamma(z + 1.0).unwrap() - log_gamma(z).unwrap()).exp();
                assert!((ratio - z).norm() <= 1e-10 * z.norm(), "z = {z}");
            }
        }
    }

    #[test]
    fn reflection_formula() {
        // Gamma(z) Gamma(1-z) = pi / sin(pi z)
        for z in [c(0.3, 0.2), c(-2.7, 1.5), c(0.5, 8.0)] {
            let lhs = gamma(z).unwrap() * gamma(Complex64::new(1.0, 0.0) - z).unwrap();
            let rhs = Complex64::new(PI, 0.0) / (z * PI).sin();
            assert!((lhs - rhs).norm() <= 1e-12 * rhs.norm(), "z = {z}");
        }
    }

    #[test]
    fn known_complex_value() {
        // |Gamma(1/2 + i t)|^2 = pi / cosh(pi t)
        let t: f64 = 7.3;
        let g = gamma(c(0.5, t)).unwrap();
        assert!((g.norm_sqr() - PI / (PI * t).cosh()).abs() <= 1e-12 * g.norm_sqr());
    }

    #[test]
    fn gamma_ratio_values() {
        assert_eq!(gamma_ratio_at_neg(1), ratio(1, 12));
        assert_eq!(gamma_ratio_at_neg(2), ratio(-1, 120));
        assert_eq!(gamma_ratio_at_neg(3), ratio(1, 1680));
    }

    #[test]
    fn gamma_ratio_matches_displayed_closed_form() {
        for n in 1..12u32 {
            let sign = if n % 2 == 1 { 1 } else { -1 };
            let expected = BigRational::new(
                BigInt::from(sign) * factorial(n),
                BigInt::from(2) * factorial(2 * n + 1),
            );
            assert_eq!(gamma_ratio_at_neg(n), expected);
        }
    }

    #[test]
    fn gamma_ratio_matches_numeric_limit() {
        for n in 1..6u32 {
            let eps = 1e-7;
            let s = c(-(n as f64) + eps, 0.0);
            let num = (log_gamma(s * 2.0 - 1.0).unwrap() - log_gamma(s).unwrap()).exp();
            let exact = to_f64(&gamma_ratio_at_neg(n));
            assert!((num.re - exact).abs() <= 1e-5 * exact.abs(), "n = {n}");
        }
    }
}
