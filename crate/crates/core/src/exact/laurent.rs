use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Sparse Laurent polynomial in two variables `P` and `U`.
///
/// In the p-adic formulas `P` stands for `p` and `U` for `p^{-s}`, so a term
/// `c P^i U^j` is `c p^{i - j s}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i64, i64), BigRational>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigRational::one(), 0, 0)
    }

    /// `c P^i U^j`.
    pub fn monomial(c: BigRational, i: i64, j: i64) -> Self {
        let mut out = Self::zero();
        out.add_term(c, i, j);
        out
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0, 0)
    }

    fn add_term(&mut self, c: BigRational, i: i64, j: i64) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: i64, j: i64) -> BigRational {
        self.terms
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &BigRational)> {
        self.terms.iter()
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, ((i, j), c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            write!(f, "{}", c.abs())?;
            if *i != 0 {
                write!(f, "*P^{i}")?;
            }
            if *j != 0 {
                write!(f, "*U^{j}")?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a LaurentPoly2> for &'a LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, rhs: &'a LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(c.clone(), i, j);
        }
        out
    }
}

impl<'a> Sub<&'a LaurentPoly2> for &'a LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: &'a LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(-c.clone(), i, j);
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPoly2> for &'a LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: &'a LaurentPoly2) -> LaurentPoly2 {
        let mut out = LaurentPoly2::zero();
        for (&(i1, j1), a) in &self.terms {
            for (&(i2, j2), b) in &rhs.terms {
                out.add_term(a * b, i1 + i2, j1 + j2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        LaurentPoly2 {
            terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }
}
