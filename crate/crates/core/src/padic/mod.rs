//! Witten zeta functions of `SL_2(Z_p)` and of congruence subgroups of
//! `SL_2`, `SL_3` and `SU_3` over `Z_p`, as exact rational functions in `p`.
//!
//! At an integer `s` every term is a rational function of `p`, so all
//! evaluation here is exact. The `p -> 1` "absolute limit" of a factored
//! formula is a rational function of `s`.

mod catalog;
mod forms;

pub use catalog::{u_form, FamilyId, GroupFamily, Representation, SL3_U, SU3_U};
pub use forms::{AffineExponent, BinomialFactor, DimensionListForm, FactorForm, PSum};

use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{rat, ratio, LaurentPoly2, Polynomial, RationalFunction, Var};

/// The prime: a concrete rational value or the indeterminate `p`.
#[derive(Clone, Debug, PartialEq)]
pub enum PArg {
    Symbolic,
    Value(BigRational),
}

/// Result of an evaluation, matching the [`PArg`] it was asked for.
#[derive(Clone, Debug, PartialEq)]
pub enum PValue {
    Symbolic(RationalFunction),
    Value(BigRational),
}

impl PValue {
    pub fn is_zero(&self) -> bool {
        match self {
            PValue::Symbolic(f) => f.is_zero(),
            PValue::Value(v) => v.is_zero(),
        }
    }
}

impl core::fmt::Display for PValue {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            PValue::Symbolic(r) => write!(f, "{r}"),
            PValue::Value(v) => write!(f, "{v}"),
        }
    }
}

fn check_level(family: &GroupFamily, m: u32) -> Result<()> {
    if family.id != FamilyId::Sl2Zp && m == 0 {
        return Err(Error::domain("the level m must be a positive integer"));
    }
    Ok(())
}

/// `zeta^W(s)` of the family at level `m` and integer `s`, as a reduced
/// rational function of `p`.
pub fn symbolic_value(family: &GroupFamily, m: u32, s: i64) -> Result<RationalFunction> {
    check_level(family, m)?;
    match &family.representation {
        Representation::Factor(f) => f.eval_at(m, s),
        Representation::DimensionList(d) => {
            let (finite, infinite) = d.eval_parts(s)?;
            Ok(&finite + &infinite)
        }
    }
}

/// `zeta^W(s)` at integer `s`, symbolic in `p` or at a given `p`.
///
/// A numeric `p` is checked against the family's constraint; symbolic
/// manipulation is not restricted.
pub fn eval_at_int_s(family: &GroupFamily, m: u32, s: i64, p: &PArg) -> Result<PValue> {
    let value = symbolic_value(family, m, s)?;
    match p {
        PArg::Symbolic => Ok(PValue::Symbolic(value)),
        PArg::Value(p) => {
            family.check_prime(p)?;
            substitute(&value, p, s).map(PValue::Value)
        }
    }
}

fn substitute(f: &RationalFunction, p: &BigRational, s: i64) -> Result<BigRational> {
    f.eval(p).map_err(|_| Error::pole_real(s as f64))
}

/// Outcome of [`verify_zero`]; the witness is the reduced value.
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroCheck {
    pub is_zero: bool,
    pub witness: RationalFunction,
}

/// Whether `zeta^W(s)` vanishes identically in `p`.
pub fn verify_zero(family: &GroupFamily, m: u32, s: i64) -> Result<ZeroCheck> {
    let witness = symbolic_value(family, m, s)?;
    Ok(ZeroCheck {
        is_zero: witness.numer().is_zero(),
        witness,
    })
}

/// `Z_0(s)` and `Z_inf(s)` of `SL_2(Z_p)` separately.
pub fn sl2_zp_parts(s: i64) -> Result<(RationalFunction, RationalFunction)> {
    match GroupFamily::get(FamilyId::Sl2Zp).representation {
        Representation::DimensionList(d) => d.eval_parts(s),
        Representation::Factor(_) => unreachable!("SL2(Z_p) is stored as a dimension list"),
    }
}

/// `lim_{p -> 1} zeta^W(s)` as a rational function of `s`.
///
/// Each `1 - p^{a + bm + cs}` behaves like `-(a + bm + cs)(p - 1)`, each
/// `1 + p^E` tends to 2 and a polynomial part tends to its coefficient sum.
/// The `(p - 1)` factors cancel only when numerator and denominator have the
/// same number of them.
pub fn absolute_limit(family: &GroupFamily, m: u32) -> Result<RationalFunction> {
    check_level(family, m)?;
    match &family.representation {
        Representation::Factor(f) => f.absolute_limit(m),
        Representation::DimensionList(_) => {
            Err(Error::domain("the absolute limit needs a factored formula"))
        }
    }
}

/// Richardson estimate of `lim_{p -> 1} zeta^W(s)` from exact values at
/// `p = 1 + h` and `p = 1 + h/2`, `h = 10^-4`.
pub fn numeric_limit(family: &GroupFamily, m: u32, s: i64) -> Result<f64> {
    let value = symbolic_value(family, m, s)?;
    let h = ratio(1, 10_000);
    let at = |step: &BigRational| substitute(&value, &(rat(1) + step), s);
    let full = at(&h)?;
    let half = at(&(&h / rat(2)))?;
    Ok(crate::exact::to_f64(&(rat(2) * half - full)))
}

/// Outcome of [`factorization_check`]: whether the two formulas agree, and
/// the cross-multiplied difference of their numerators.
#[derive(Clone, Debug, PartialEq)]
pub struct FactorizationReport {
    pub holds: bool,
    pub difference: LaurentPoly2,
}

/// Compares the factored formula of `SL3_CONG` or `SU3_CONG` with the
/// `u(X)` form, exactly, as Laurent polynomials in `p` and `p^{-s}`.
pub fn factorization_check(family: &GroupFamily) -> Result<FactorizationReport> {
    let u = match family.id {
        FamilyId::Sl3Cong => SL3_U,
        FamilyId::Su3Cong => SU3_U,
        _ => {
            return Err(Error::domain(
                "factorization check applies to SL3_CONG and SU3_CONG",
            ))
        }
    };
    factorization_check_with_u(family, u)
}

/// [`factorization_check`] against an arbitrary `u(X) = sum c_k X^k`, given as `(c_k, k)`.
pub fn factorization_check_with_u(
    family: &GroupFamily,
    u: &[(i64, i64)],
) -> Result<FactorizationReport> {
    let factored = match &family.representation {
        Representation::Factor(f) => f,
        Representation::DimensionList(_) => {
            return Err(Error::domain(
                "factorization check needs a factored formula",
            ))
        }
    };
    let expanded = u_form(u);
    if factored.prefactor != expanded.prefactor {
        return Err(Error::domain("prefactors differ"));
    }
    let (n1, d1) = factored.laurent_parts()?;
    let (n2, d2) = expanded.laurent_parts()?;
    let difference = &(&n1 * &d2) - &(&n2 * &d1);
    Ok(FactorizationReport {
        holds: difference.is_zero(),
        difference,
    })
}

/// `[n]_p = 1 + p + ... + p^{n-1}`.
pub fn q_integer(n: u32) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::domain("q-integers are indexed from 1"));
    }
    Ok(Polynomial::new(
        Var::P,
        (0..n).map(|_| BigRational::one()).collect(),
    ))
}

/// `[n]_p` at a given `p`; `p = 1` gives `n`.
pub fn q_integer_at(n: u32, p: &BigRational) -> Result<BigRational> {
    Ok(q_integer(n)?.eval(p))
}

/// `zeta^W(-1)` of the `SU_3` congruence subgroup, compared with the shape
/// `c p^{8m-2} / [5]_p`.
#[derive(Clone, Debug, PartialEq)]
pub struct Su3CongMinus1 {
    /// The value, symbolic in `p`.
    pub value: RationalFunction,
    /// `value * [5]_p / p^{8m-2}` when that is a constant.
    pub coefficient: Option<BigRational>,
    /// `lim_{p -> 1}` of the value.
    pub limit: BigRational,
}

pub fn su3_cong_minus1(m: u32) -> Result<Su3CongMinus1> {
    let family = GroupFamily::get(FamilyId::Su3Cong);
    let value = symbolic_value(&family, m, -1)?;
    let shape = RationalFunction::new(
        Polynomial::monomial(Var::P, rat(1), (8 * m - 2) as usize),
        q_integer(5)?,
    )?;
    let coefficient = value.checked_div(&shape)?.as_constant();
    let limit = value.eval(&rat(1)).map_err(|_| Error::pole_real(-1.0))?;
    Ok(Su3CongMinus1 {
        value,
        coefficient,
        limit,
    })
}

/// [`su3_cong_minus1`] at a numeric `p`. This evaluates the formal rational
/// function, so the `p != 3` hypothesis is not checked here.
pub fn su3_cong_minus1_at(m: u32, p: &BigRational) -> Result<BigRational> {
    let family = GroupFamily::get(FamilyId::Su3Cong);
    substitute(&symbolic_value(&family, m, -1)?, p, -1)
}

/// Coefficient arrays of a rational function, ascending degree, as strings.
pub fn coefficient_arrays(f: &RationalFunction) -> (Vec<BigRational>, Vec<BigRational>) {
    (f.numer().coeffs().to_vec(), f.denom().coeffs().to_vec())
}

pub(crate) fn p_power(k: i64) -> RationalFunction {
    let mono = Polynomial::monomial(Var::P, rat(1), k.unsigned_abs() as usize);
    if k >= 0 {
        RationalFunction::from_poly(mono)
    } else {
        RationalFunction::new(Polynomial::one(Var::P), mono).expect("nonzero monomial")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn fam(id: FamilyId) -> GroupFamily {
        GroupFamily::get(id)
    }

    fn rf(num: Polynomial, den: Polynomial) -> RationalFunction {
        RationalFunction::new(num, den).unwrap()
    }

    fn poly(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(Var::P, c)
    }

    #[test]
    fn sl2_zp_values() {
        let f = fam(FamilyId::Sl2Zp);
        let v0 = symbolic_value(&f, 0, 0).unwrap();
        assert_eq!(v0, rf(poly(&[-4]), poly(&[-1, 1])));
        assert!(verify_zero(&f, 0, -1).unwrap().is_zero);
        assert!(verify_zero(&f, 0, -2).unwrap().is_zero);
        let (z0, zinf) = sl2_zp_parts(-2).unwrap();
        assert_eq!(z0, RationalFunction::from_poly(poly(&[0, -1, 0, 1])));
        assert_eq!(zinf, RationalFunction::from_poly(poly(&[0, 1, 0, -1])));
        let (z0, zinf) = sl2_zp_parts(-1).unwrap();
        assert_eq!(z0, RationalFunction::from_poly(poly(&[0, 1, 1])));
        assert_eq!(zinf, RationalFunction::from_poly(poly(&[0, -1, -1])));
        let (z0, zinf) = sl2_zp_parts(0).unwrap();
        assert_eq!(z0, RationalFunction::from_poly(poly(&[4, 1])));
        // -4/(p-1) - p - 4
        let want = &RationalFunction::from_poly(poly(&[-4, -1])) + &rf(poly(&[-4]), poly(&[-1, 1]));
        assert_eq!(zinf, want);
    }

    #[test]
    fn sl2_zp_numeric_primes() {
        let f = fam(FamilyId::Sl2Zp);
        for q in [3i64, 5, 7] {
            for s in [-2, -1] {
                let v = eval_at_int_s(&f, 0, s, &PArg::Value(rat(q))).unwrap();
                assert!(v.is_zero());
            }
            let (z0, _) = sl2_zp_parts(-2).unwrap();
            assert_eq!(z0.eval(&rat(q)).unwrap(), rat(q * (q * q - 1)));
        }
        assert!(matches!(
            eval_at_int_s(&f, 0, -1, &PArg::Value(rat(2))),
            Err(Error::Constraint(_))
        ));
    }

    #[test]
    fn sl2_zp_positive_s_against_direct_sum() {
        // s = 2 at p = 5, summing the dimension list by hand
        let f = fam(FamilyId::Sl2Zp);
        let v = match eval_at_int_s(&f, 0, 2, &PArg::Value(rat(5))).unwrap() {
            PValue::Value(v) => v,
            _ => unreachable!(),
        };
        let inv2 = |d: i64| ratio(1, d * d);
        let z0 = rat(1)
            + rat(2) * inv2(2)
            + rat(2) * inv2(3)
            + rat(2) * inv2(4)
            + inv2(5)
            + rat(1) * inv2(6);
        let zinf =
            (rat(20) * inv2(12) + rat(12) * inv2(20) + rat(8) * inv2(30)) / (rat(1) - ratio(1, 5));
        assert_eq!(v, z0 + zinf);
        // the geometric factor has a pole at s = 1
        assert!(matches!(symbolic_value(&f, 0, 1), Err(Error::Pole { .. })));
    }

    #[test]
    fn sl2_congruence() {
        let f = fam(FamilyId::Sl2Cong);
        for m in 1..=3u32 {
            assert!(verify_zero(&f, m, -2).unwrap().is_zero);
            let v = symbolic_value(&f, m, -1).unwrap();
            let want = rf(
                -Polynomial::monomial(Var::P, rat(1), (3 * m + 1) as usize),
                poly(&[1, 1]),
            );
            assert_eq!(v, want);
        }
        assert!(symbolic_value(&f, 0, -1).is_err());
    }

    #[test]
    fn sl3_congruence_zeros() {
        let f = fam(FamilyId::Sl3Cong);
        for m in 1..=3 {
            assert!(verify_zero(&f, m, -1).unwrap().is_zero);
            assert!(verify_zero(&f, m, -2).unwrap().is_zero);
            assert!(!verify_zero(&f, m, 0).unwrap().is_zero);
        }
        assert!(matches!(
            eval_at_int_s(&f, 1, -1, &PArg::Value(rat(3))),
            Err(Error::Constraint(_))
        ));
        assert!(eval_at_int_s(&f, 1, -1, &PArg::Value(rat(2))).is_ok());
    }

    #[test]
    fn su3_congruence_values() {
        let f = fam(FamilyId::Su3Cong);
        for m in 1..=3 {
            assert!(verify_zero(&f, m, -2).unwrap().is_zero);
            assert!(verify_zero(&f, m, 0).unwrap().is_zero);
            let check = verify_zero(&f, m, -1).unwrap();
            assert!(!check.is_zero);
            // value * [5]_p is a monomial in p with coefficient -2
            let q5 = RationalFunction::from_poly(q_integer(5).unwrap());
            let prod = &check.witness * &q5;
            let mono = Polynomial::monomial(Var::P, rat(-2), (8 * m - 2) as usize);
            assert_eq!(prod, RationalFunction::from_poly(mono));
        }
        let r = su3_cong_minus1(1).unwrap();
        assert_eq!(r.coefficient, Some(rat(-2)));
        assert_eq!(r.limit, ratio(-2, 5));
        assert_eq!(su3_cong_minus1_at(1, &rat(2)).unwrap(), ratio(-128, 31));
        assert_eq!(su3_cong_minus1_at(1, &rat(3)).unwrap(), ratio(-1458, 121));
    }

    #[test]
    fn u_forms_evaluate_like_factored_forms() {
        for (id, u) in [(FamilyId::Sl3Cong, SL3_U), (FamilyId::Su3Cong, SU3_U)] {
            let f = fam(id);
            let g = u_form(u);
            for s in [-3i64, -2, -1, 0, 2, 3] {
                for m in [1u32, 2] {
                    assert_eq!(
                        symbolic_value(&f, m, s).unwrap(),
                        g.eval_at(m, s).unwrap(),
                        "{id:?} s = {s}"
                    );
                }
            }
        }
    }

    #[test]
    fn factorizations_hold() {
        assert!(factorization_check(&fam(FamilyId::Sl3Cong)).unwrap().holds);
        assert!(factorization_check(&fam(FamilyId::Su3Cong)).unwrap().holds);
        // mutation: drop the X^{-1} term of u
        let broken = [(1, 3), (1, 2), (-1, 1), (-1, 0)];
        let report = factorization_check_with_u(&fam(FamilyId::Sl3Cong), &broken).unwrap();
        assert!(!report.holds && !report.difference.is_zero());
        // the two families' u polynomials are not interchangeable
        assert!(
            !factorization_check_with_u(&fam(FamilyId::Sl3Cong), SU3_U)
                .unwrap()
                .holds
        );
        assert!(factorization_check(&fam(FamilyId::Sl2Zp)).is_err());
    }

    fn s_poly(c: &[(i64, i64)]) -> Polynomial {
        Polynomial::new(Var::S, c.iter().map(|&(n, d)| ratio(n, d)).collect())
    }

    #[test]
    fn absolute_limits() {
        let sl2 = absolute_limit(&fam(FamilyId::Sl2Cong), 1).unwrap();
        assert_eq!(
            sl2,
            RationalFunction::new(s_poly(&[(2, 1), (1, 1)]), s_poly(&[(-1, 1), (1, 1)])).unwrap()
        );
        // (s - 1/2)(s - 2/3) = s^2 - 7/6 s + 1/3
        let den = s_poly(&[(1, 3), (-7, 6), (1, 1)]);
        let sl3 = absolute_limit(&fam(FamilyId::Sl3Cong), 2).unwrap();
        assert_eq!(
            sl3,
            RationalFunction::new(s_poly(&[(2, 1), (3, 1), (1, 1)]), den.clone()).unwrap()
        );
        let su3 = absolute_limit(&fam(FamilyId::Su3Cong), 3).unwrap();
        assert_eq!(
            su3,
            RationalFunction::new(s_poly(&[(0, 1), (2, 1), (1, 1)]), den).unwrap()
        );
        assert!(absolute_limit(&fam(FamilyId::Sl2Zp), 1).is_err());
        // zeros and poles
        assert!(sl3.eval(&rat(-1)).unwrap().is_zero() && sl3.eval(&rat(-2)).unwrap().is_zero());
        assert!(su3.eval(&rat(0)).unwrap().is_zero());
        assert_eq!(su3.eval(&rat(-1)).unwrap(), ratio(-2, 5));
        assert!(sl3.eval(&ratio(1, 2)).is_err() && sl3.eval(&ratio(2, 3)).is_err());
    }

    #[test]
    fn limits_match_numeric_extrapolation() {
        for id in [FamilyId::Sl2Cong, FamilyId::Sl3Cong, FamilyId::Su3Cong] {
            let f = fam(id);
            let lim = absolute_limit(&f, 1).unwrap();
            for s in [-1i64, -2, 2, 3] {
                let want = crate::exact::to_f64(&lim.eval(&rat(s)).unwrap());
                let got = numeric_limit(&f, 1, s).unwrap();
                assert!((got - want).abs() < 1e-6, "{id:?} s = {s}: {got} vs {want}");
            }
        }
    }

    #[test]
    fn degenerate_limit_detected() {
        let form = FactorForm {
            prefactor: AffineExponent::new(0, 0, 0),
            num: vec![BinomialFactor::minus(AffineExponent::new(1, 0, -1))],
            den: vec![],
            num_sums: vec![],
            den_sums: vec![],
        };
        assert!(matches!(
            form.absolute_limit(1),
            Err(Error::DegenerateLimit { .. })
        ));
    }

    #[test]
    fn q_integers() {
        assert_eq!(q_integer(5).unwrap(), poly(&[1, 1, 1, 1, 1]));
        assert_eq!(q_integer_at(5, &rat(1)).unwrap(), rat(5));
        assert_eq!(q_integer_at(5, &rat(2)).unwrap(), rat(31));
        assert!(q_integer(0).is_err());
    }
}
