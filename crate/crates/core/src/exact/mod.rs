//! Exact arithmetic: rationals, Bernoulli numbers, univariate polynomials and
//! rational functions, and two-variable Laurent polynomials.

mod bernoulli;
mod laurent;
mod poly;
mod ratfunc;

pub use bernoulli::{bernoulli, zeta_neg_int};
pub use laurent::LaurentPoly2;
pub use poly::{Polynomial, Var};
pub use ratfunc::RationalFunction;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

use num_traits::{One, ToPrimitive};

/// Integer as an exact rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `num/den` as an exact rational. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Falling product `a (a-1) ... (a-k+1)`; the empty product for `k = 0` is 1.
pub fn falling_factorial(a: &BigRational, k: u32) -> BigRational {
    let mut acc = BigRational::one();
    let mut term = a.clone();
    for _ in 0..k {
        acc *= &term;
        term -= BigRational::one();
    }
    acc
}

/// Rising product `a (a+1) ... (a+k-1)`.
pub fn rising_factorial(a: &BigRational, k: u32) -> BigRational {
    let mut acc = BigRational::one();
    let mut term = a.clone();
    for _ in 0..k {
        acc *= &term;
        term += BigRational::one();
    }
    acc
}

/// Generalized binomial coefficient `C(a, k) = a (a-1) ... (a-k+1) / k!`.
pub fn binomial(a: &BigRational, k: u32) -> BigRational {
    falling_factorial(a, k) / BigRational::from_integer(factorial(k))
}

/// [`binomial`] for an integer top argument.
pub fn binomial_int(n: i64, k: u32) -> BigRational {
    binomial(&rat(n), k)
}

/// Nearest `f64` to an exact rational, without overflowing on large parts.
pub fn to_f64(q: &BigRational) -> f64 {
    if let Some(v) = q.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // Scale both parts down to 64 significant bits before dividing.
    let n = q.numer();
    let d = q.denom();
    let nb = n.bits() as i64;
    let db = d.bits() as i64;
    let shift_n = (nb - 64).max(0);
    let shift_d = (db - 64).max(0);
    let n_small: BigInt = n >> shift_n as usize;
    let d_small: BigInt = d >> shift_d as usize;
    let mant = n_small.to_f64().unwrap_or(0.0) / d_small.to_f64().unwrap_or(1.0);
    let e = shift_n - shift_d;
    mant * libm_pow2(e)
}

fn libm_pow2(e: i64) -> f64 {
    let e = e.clamp(-2000, 2000) as i32;
    num_traits::Float::powi(2.0f64, e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial_int(4, 2), rat(6));
        assert_eq!(binomial_int(-3, 2), rat(6));
        assert_eq!(binomial_int(-1, 3), rat(-1));
        assert_eq!(binomial_int(5, 0), rat(1));
        assert_eq!(binomial(&ratio(1, 2), 2), ratio(-1, 8));
    }

    #[test]
    fn rising_and_falling_agree() {
        // (a)_k rising = (a+k-1) falling k
        let a = ratio(-7, 3);
        for k in 0..8 {
            let shifted = &a + rat(k as i64) - rat(1);
            assert_eq!(rising_factorial(&a, k), falling_factorial(&shifted, k));
        }
    }

    #[test]
    fn to_f64_handles_huge_parts() {
        let big =
            BigRational::from_integer(factorial(200)) / BigRational::from_integer(factorial(199));
        assert_eq!(to_f64(&big), 200.0);
        let ten = BigInt::from(10);
        let huge = num_traits::pow(ten, 400);
        let q = BigRational::new(&huge * BigInt::from(3) + BigInt::one(), huge);
        assert_eq!(to_f64(&q), 3.0);
    }
}
