use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{Polynomial, Var};
use crate::error::{Error, Result};

/// Reduced quotient of two polynomials in one indeterminate.
///
/// Always stored with `gcd(num, den) = 1` and a monic denominator; zero is
/// `0 / 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    /// Skips the gcd; the caller guarantees `num` and `den` are coprime.
    pub(crate) fn from_coprime(num: Polynomial, den: Polynomial) -> Self {
        let var = den.variable();
        let lc = den.leading().expect("nonzero denominator").clone();
        let inv = lc.recip();
        RationalFunction {
            num: num.scale(&inv).with_var(var),
            den: den.scale(&inv).with_var(var),
        }
    }

    fn normalized(num: Polynomial, den: Polynomial) -> Self {
        let var = if den.is_constant() {
            num.variable()
        } else {
            den.variable()
        };
        if num.is_zero() {
            return RationalFunction {
                num: Polynomial::zero(var),
                den: Polynomial::one(var),
            };
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = if g.is_constant() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides"),
                den.div_exact(&g).expect("gcd divides"),
            )
        };
        let lc = d.leading().expect("nonzero denominator").clone();
        if !lc.is_one() {
            let inv = lc.recip();
            n = n.scale(&inv);
            d = d.scale(&inv);
        }
        RationalFunction {
            num: n.with_var(var),
            den: d.with_var(var),
        }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        let var = p.variable();
        RationalFunction {
            num: p,
            den: Polynomial::one(var),
        }
    }

    pub fn constant(var: Var, c: BigRational) -> Self {
        Self::from_poly(Polynomial::constant(var, c))
    }

    pub fn zero(var: Var) -> Self {
        Self::from_poly(Polynomial::zero(var))
    }

    pub fn one(var: Var) -> Self {
        Self::from_poly(Polynomial::one(var))
    }

    pub fn var(var: Var) -> Self {
        Self::from_poly(Polynomial::var(var))
    }

    pub fn numer(&self) -> &Polynomial {
        &self.num
    }

    pub fn denom(&self) -> &Polynomial {
        &self.den
    }

    pub fn variable(&self) -> Var {
        self.den.variable()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The constant value, if this is a constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.num.is_constant() && self.den.is_constant() {
            Some(self.num.coeff(0) / self.den.coeff(0))
        } else {
            None
        }
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let k = e.unsigned_abs() as u32;
        Ok(RationalFunction {
            num: base.num.pow(k),
            den: base.den.pow(k),
        })
    }

    /// Exact value at a rational point; a vanishing denominator is a pole.
    pub fn eval(&self, at: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(Error::Pole {
                at: Complex64::new(super::to_f64(at), 0.0),
            });
        }
        Ok(self.num.eval(at) / d)
    }

    pub fn eval_complex(&self, at: Complex64) -> Complex64 {
        self.num.eval_complex(at) / self.den.eval_complex(at)
    }

    /// Rewrite as `num / den` with `den(0) = 1`, the convention used when
    /// printing closed forms like `x / (1 - x)`. Falls back to the monic form
    /// when the denominator vanishes at zero.
    pub fn unit_constant_form(&self) -> (Polynomial, Polynomial) {
        let c = self.den.coeff(0);
        if c.is_zero() {
            return (self.num.clone(), self.den.clone());
        }
        let inv = c.recip();
        (self.num.scale(&inv), self.den.scale(&inv))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            let c = self.den.coeff(0);
            if c.is_one() {
                return write!(f, "{}", self.num);
            }
        }
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &'a RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::normalized(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::normalized(num, &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &'a RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &'a RationalFunction) -> RationalFunction {
        RationalFunction::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> Self {
        -&self
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_poly(p)
    }
}
