use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::to_f64;
use crate::error::{Error, Result};

/// Name of a polynomial indeterminate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(pub char);

impl Var {
    pub const X: Var = Var('x');
    pub const P: Var = Var('p');
    pub const S: Var = Var('s');
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Univariate polynomial with rational coefficients, stored in ascending
/// degree. The zero polynomial has no coefficients; otherwise the last
/// coefficient is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    var: Var,
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    pub fn new(var: Var, coeffs: Vec<BigRational>) -> Self {
        let mut p = Polynomial { var, coeffs };
        p.trim();
        p
    }

    pub fn from_ints(var: Var, coeffs: &[i64]) -> Self {
        Self::new(
            var,
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn zero(var: Var) -> Self {
        Polynomial {
            var,
            coeffs: Vec::new(),
        }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, BigRational::one())
    }

    pub fn constant(var: Var, c: BigRational) -> Self {
        Self::new(var, vec![c])
    }

    /// The indeterminate itself.
    pub fn var(var: Var) -> Self {
        Self::monomial(var, BigRational::one(), 1)
    }

    pub fn monomial(var: Var, c: BigRational, degree: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(var, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn variable(&self) -> Var {
        self.var
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    fn merged_var(&self, other: &Self) -> Var {
        if self.var == other.var || other.is_constant() {
            self.var
        } else if self.is_constant() {
            other.var
        } else {
            panic!(
                "polynomial indeterminates differ: {} vs {}",
                self.var, other.var
            )
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.var, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by `var^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(self.var, coeffs)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.var);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Scale to leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let var = self.merged_var(divisor);
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let n = rem.len();
        if n <= dd {
            return Ok((Self::zero(var), Self::new(var, rem)));
        }
        let mut quot = vec![BigRational::zero(); n - dd];
        for i in (0..n - dd).rev() {
            let c = &rem[i + dd] * &lc_inv;
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * d;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(var, quot), Self::new(var, rem)))
    }

    /// Division that must leave no remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::domain("polynomial division is not exact"));
        }
        Ok(q)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let var = self.merged_var(other);
        let mut a = self.clone().with_var(var);
        let mut b = other.clone().with_var(var);
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("divisor is nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.var,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, at: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * at + c)
    }

    /// Horner evaluation at a complex floating-point point.
    pub fn eval_complex(&self, at: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * at + to_f64(c))
    }

    /// `self(inner(var))`, in the indeterminate of `inner`.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero(inner.var);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Self::constant(inner.var, c.clone());
        }
        acc
    }

    /// Sum of coefficients, i.e. the value at 1.
    pub fn coefficient_sum(&self) -> BigRational {
        self.coeffs
            .iter()
            .fold(BigRational::zero(), |acc, c| acc + c)
    }

    /// Multiplicity of `root` as a root of the polynomial (0 if not a root).
    /// The zero polynomial reports `usize::MAX`.
    pub fn root_multiplicity(&self, root: &BigRational) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let linear = Self::new(self.var, vec![-root.clone(), BigRational::one()]);
        let mut p = self.clone();
        let mut k = 0;
        loop {
            let (q, r) = p.div_rem(&linear).expect("linear divisor");
            if !r.is_zero() {
                return k;
            }
            p = q;
            k += 1;
        }
    }

    /// Human-readable form such as `1 + 26x + 66x^2`.
    pub fn to_pretty(&self) -> String {
        alloc::format!("{self}")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one();
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        if mag.denom().is_one() {
                            write!(f, "{mag}")?;
                        } else {
                            write!(f, "({mag})")?;
                        }
                    }
                    write!(f, "{}", self.var)?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        let var = self.merged_var(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Polynomial::new(var, coeffs)
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        let var = self.merged_var(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Polynomial::new(var, coeffs)
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        let var = self.merged_var(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(var);
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(var, coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.var, self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};
    use proptest::prelude::*;

    fn x(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(Var::X, c)
    }

    #[test]
    fn gcd_example() {
        let g = x(&[-1, 0, 1]).gcd(&x(&[-1, 1]));
        assert_eq!(g, x(&[-1, 1]));
    }

    #[test]
    fn gcd_is_monic_and_divides() {
        let a = &x(&[1, 1]) * &x(&[2, 0, 3]);
        let b = &x(&[1, 1]) * &x(&[-5, 7]);
        let g = a.gcd(&b);
        assert_eq!(g, x(&[1, 1]));
        assert!(a.div_rem(&g).unwrap().1.is_zero());
    }

    #[test]
    fn division_by_zero_polynomial() {
        assert_eq!(
            x(&[1, 2]).div_rem(&Polynomial::zero(Var::X)),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn div_exact_rejects_remainder() {
        assert!(x(&[1, 0, 1]).div_exact(&x(&[1, 1])).is_err());
        assert_eq!(x(&[-1, 0, 1]).div_exact(&x(&[1, 1])).unwrap(), x(&[-1, 1]));
    }

    #[test]
    fn compose_and_eval() {
        // (x^2 + 1) o (x - 1) = x^2 - 2x + 2
        let c = x(&[1, 0, 1]).compose(&x(&[-1, 1]));
        assert_eq!(c, x(&[2, -2, 1]));
        assert_eq!(c.eval(&rat(3)), rat(5));
        assert_eq!(x(&[0, 1, 1]).eval(&ratio(1, 2)), ratio(3, 4));
    }

    #[test]
    fn root_multiplicity_counts() {
        let p = &x(&[-1, 1]).pow(3) * &x(&[2, 1]);
        assert_eq!(p.root_multiplicity(&rat(1)), 3);
        assert_eq!(p.root_multiplicity(&rat(-2)), 1);
        assert_eq!(p.root_multiplicity(&rat(0)), 0);
    }

    #[test]
    fn display() {
        assert_eq!(
            x(&[1, 26, 66, 26, 1]).to_pretty(),
            "1 + 26x + 66x^2 + 26x^3 + x^4"
        );
        assert_eq!(x(&[0, -1, 1]).to_pretty(), "-x + x^2");
        assert_eq!(Polynomial::zero(Var::P).to_pretty(), "0");
    }

    fn small_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(-9i64..=9, 0..6).prop_map(|c| x(&c))
    }

    proptest! {
        #[test]
        fn product_evaluates_to_product_of_values(
            f in small_poly(), g in small_poly(), num in -20i64..20, den in 1i64..7
        ) {
            let at = ratio(num, den);
            prop_assert_eq!((&f * &g).eval(&at), f.eval(&at) * g.eval(&at));
            prop_assert_eq!((&f + &g).eval(&at), f.eval(&at) + g.eval(&at));
        }

        #[test]
        fn div_rem_reconstructs(f in small_poly(), g in small_poly()) {
            prop_assume!(!g.is_zero());
            let (q, r) = f.div_rem(&g).unwrap();
            prop_assert_eq!(&(&q * &g) + &r, f);
            prop_assert!(r.degree() < g.degree() || r.is_zero());
        }
    }
}
