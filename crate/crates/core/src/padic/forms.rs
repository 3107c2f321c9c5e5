use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Zero;

use super::p_power;
use crate::error::{Error, Result};
use crate::exact::{rat, LaurentPoly2, Polynomial, RationalFunction, Var};

/// Exponent `a + b m + c s` of `p`, `m` the level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AffineExponent {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl AffineExponent {
    pub const fn new(a: i64, b: i64, c: i64) -> Self {
        AffineExponent { a, b, c }
    }

    pub fn at(&self, m: u32, s: i64) -> i64 {
        self.a + self.b * m as i64 + self.c * s
    }
}

/// `1 - sigma p^E` with `sigma = +1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BinomialFactor {
    pub sigma: i8,
    pub exp: AffineExponent,
}

impl BinomialFactor {
    /// `1 - p^E`.
    pub const fn minus(exp: AffineExponent) -> Self {
        BinomialFactor { sigma: 1, exp }
    }

    /// `1 + p^E`.
    pub const fn plus(exp: AffineExponent) -> Self {
        BinomialFactor { sigma: -1, exp }
    }

    fn laurent(&self) -> Result<LaurentPoly2> {
        let mono = laurent_power(&self.exp, &rat(-self.sigma as i64))?;
        Ok(&LaurentPoly2::one() + &mono)
    }
}

/// `sum_j c_j p^{E_j}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PSum {
    pub terms: Vec<(BigRational, AffineExponent)>,
}

impl PSum {
    pub fn new(terms: Vec<(BigRational, AffineExponent)>) -> Self {
        PSum { terms }
    }

    /// As `poly / p^shift` with `poly` an ordinary polynomial; returns `(poly, -shift)`.
    fn split(&self, m: u32, s: i64) -> (Polynomial, i64) {
        let powers: Vec<i64> = self.terms.iter().map(|(_, e)| e.at(m, s)).collect();
        let low = powers.iter().copied().min().unwrap_or(0);
        let mut poly = Polynomial::zero(Var::P);
        for ((c, _), k) in self.terms.iter().zip(&powers) {
            poly = &poly + &Polynomial::monomial(Var::P, c.clone(), (k - low) as usize);
        }
        (poly, low)
    }

    fn laurent(&self) -> Result<LaurentPoly2> {
        let mut acc = LaurentPoly2::zero();
        for (c, e) in &self.terms {
            acc = &acc + &laurent_power(e, c)?;
        }
        Ok(acc)
    }

    fn value_at_one(&self) -> BigRational {
        self.terms
            .iter()
            .fold(BigRational::zero(), |acc, (c, _)| acc + c)
    }
}

/// `c p^{a + cs}` as `c P^a U^{-c}`; level-dependent exponents are rejected.
fn laurent_power(e: &AffineExponent, c: &BigRational) -> Result<LaurentPoly2> {
    if e.b != 0 {
        return Err(Error::domain(
            "level-dependent exponent outside the prefactor",
        ));
    }
    Ok(LaurentPoly2::monomial(c.clone(), e.a, -e.c))
}

/// `p^{prefactor} prod(1 - sigma p^E) prod(sums) / (prod(1 - sigma p^E) prod(sums))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FactorForm {
    pub prefactor: AffineExponent,
    pub num: Vec<BinomialFactor>,
    pub den: Vec<BinomialFactor>,
    pub num_sums: Vec<PSum>,
    pub den_sums: Vec<PSum>,
}

/// A product of polynomials in `p` times `p^shift`.
struct Accum {
    poly: Polynomial,
    shift: i64,
}

impl Accum {
    fn new() -> Self {
        Accum {
            poly: Polynomial::one(Var::P),
            shift: 0,
        }
    }

    fn binomial(&mut self, f: &BinomialFactor, m: u32, s: i64) {
        let k = f.exp.at(m, s);
        let sigma = rat(f.sigma as i64);
        let mono = Polynomial::monomial(Var::P, rat(1), k.unsigned_abs() as usize);
        let one = Polynomial::one(Var::P);
        let factor = if k >= 0 {
            // 1 - sigma p^k
            &one - &mono.scale(&sigma)
        } else {
            // (p^{|k|} - sigma) / p^{|k|}
            self.shift += k;
            &mono - &Polynomial::constant(Var::P, sigma)
        };
        self.poly = &self.poly * &factor;
    }

    fn sum(&mut self, f: &PSum, m: u32, s: i64) {
        let (poly, low) = f.split(m, s);
        self.shift += low;
        self.poly = &self.poly * &poly;
    }
}

impl FactorForm {
    /// Value at integer `s` as a reduced rational function of `p`.
    pub fn eval_at(&self, m: u32, s: i64) -> Result<RationalFunction> {
        let mut num = Accum::new();
        let mut den = Accum::new();
        num.shift = self.prefactor.at(m, s);
        for f in &self.num {
            num.binomial(f, m, s);
        }
        for f in &self.num_sums {
            num.sum(f, m, s);
        }
        for f in &self.den {
            den.binomial(f, m, s);
        }
        for f in &self.den_sums {
            den.sum(f, m, s);
        }
        if den.poly.is_zero() {
            return Err(Error::pole_real(s as f64));
        }
        let shift = num.shift - den.shift;
        let lift = |p: Polynomial, k: i64| if k > 0 { p.shift(k as usize) } else { p };
        RationalFunction::new(lift(num.poly, shift), lift(den.poly, -shift))
    }

    /// Numerator and denominator without the prefactor, in `P = p`, `U = p^{-s}`.
    pub fn laurent_parts(&self) -> Result<(LaurentPoly2, LaurentPoly2)> {
        let mut num = LaurentPoly2::one();
        for f in &self.num {
            num = &num * &f.laurent()?;
        }
        for f in &self.num_sums {
            num = &num * &f.laurent()?;
        }
        let mut den = LaurentPoly2::one();
        for f in &self.den {
            den = &den * &f.laurent()?;
        }
        for f in &self.den_sums {
            den = &den * &f.laurent()?;
        }
        Ok((num, den))
    }

    /// `lim_{p -> 1}`, a rational function of `s`.
    pub fn absolute_limit(&self, m: u32) -> Result<RationalFunction> {
        let (num, nz) = limit_side(&self.num, &self.num_sums, m)?;
        let (den, dz) = limit_side(&self.den, &self.den_sums, m)?;
        if nz != dz {
            return Err(Error::DegenerateLimit {
                numerator_zeros: nz,
                denominator_zeros: dz,
            });
        }
        RationalFunction::new(num, den)
    }
}

/// Limit of one side with its `(p - 1)` factors removed, and their count.
fn limit_side(factors: &[BinomialFactor], sums: &[PSum], m: u32) -> Result<(Polynomial, usize)> {
    let mut acc = Polynomial::one(Var::S);
    let mut zeros = 0;
    for f in factors {
        if f.sigma < 0 {
            acc = acc.scale(&rat(2));
            continue;
        }
        // 1 - p^g ~ -g (p - 1)
        zeros += 1;
        let g0 = f.exp.a + f.exp.b * m as i64;
        acc = &acc * &Polynomial::new(Var::S, vec![rat(-g0), rat(-f.exp.c)]);
    }
    for f in sums {
        let v = f.value_at_one();
        if v.is_zero() {
            return Err(Error::domain("a polynomial part vanishes at p = 1"));
        }
        acc = acc.scale(&v);
    }
    Ok((acc, zeros))
}

/// `sum mult * dim^{-s}` over a finite list, plus a second list carrying the
/// geometric factor `1 / (1 - p^{1-s})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DimensionListForm {
    pub finite: Vec<(RationalFunction, RationalFunction)>,
    pub infinite: Vec<(RationalFunction, RationalFunction)>,
}

impl DimensionListForm {
    /// The finite and infinite parts at integer `s`.
    pub fn eval_parts(&self, s: i64) -> Result<(RationalFunction, RationalFunction)> {
        let finite = sum_list(&self.finite, s)?;
        if s == 1 {
            return Err(Error::pole_real(1.0));
        }
        let geometric = (&RationalFunction::one(Var::P) - &p_power(1 - s)).recip()?;
        let infinite = &sum_list(&self.infinite, s)? * &geometric;
        Ok((finite, infinite))
    }
}

fn sum_list(list: &[(RationalFunction, RationalFunction)], s: i64) -> Result<RationalFunction> {
    let mut acc = RationalFunction::zero(Var::P);
    for (mult, dim) in list {
        acc = &acc + &(mult * &dim.pow(-s)?);
    }
    Ok(acc)
}
