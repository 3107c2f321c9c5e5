use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_integer::Integer;
use num_rational::BigRational;

use super::forms::{AffineExponent, BinomialFactor, DimensionListForm, FactorForm, PSum};
use crate::error::{Error, Result};
use crate::exact::{rat, ratio, Polynomial, RationalFunction, Var};

/// `u(X)` for `SL_3`: `X^3 + X^2 - X - 1 - X^{-1}`, as `(coefficient, power)`.
pub const SL3_U: &[(i64, i64)] = &[(1, 3), (1, 2), (-1, 1), (-1, 0), (-1, -1)];
/// `u(X)` for `SU_3`: `-X^3 + X^2 - X + 1 - X^{-1}`.
pub const SU3_U: &[(i64, i64)] = &[(-1, 3), (1, 2), (-1, 1), (1, 0), (-1, -1)];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    /// `SL_2(Z_p)`, `p` odd.
    Sl2Zp,
    /// `SL_2(Z_p)[p^m]`, `p` odd.
    Sl2Cong,
    /// `SL_3(Z_p)[p^m]`, `p != 3`.
    Sl3Cong,
    /// `SU_3(Z_p)[p^m]`, `p != 3`.
    Su3Cong,
}

impl FamilyId {
    pub const ALL: [FamilyId; 4] = [
        FamilyId::Sl2Zp,
        FamilyId::Sl2Cong,
        FamilyId::Sl3Cong,
        FamilyId::Su3Cong,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FamilyId::Sl2Zp => "SL2_ZP",
            FamilyId::Sl2Cong => "SL2_CONG",
            FamilyId::Sl3Cong => "SL3_CONG",
            FamilyId::Su3Cong => "SU3_CONG",
        }
    }

    pub fn description(&self) -> &'static str {
        match self {
            FamilyId::Sl2Zp => "SL_2(Z_p), p odd",
            FamilyId::Sl2Cong => "SL_2(Z_p)[p^m], p odd",
            FamilyId::Sl3Cong => "SL_3(Z_p)[p^m], p != 3",
            FamilyId::Su3Cong => "SU_3(Z_p)[p^m], p != 3",
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FamilyId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::domain(alloc::format!("unknown family {s}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Representation {
    Factor(FactorForm),
    DimensionList(DimensionListForm),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupFamily {
    pub id: FamilyId,
    pub representation: Representation,
}

impl GroupFamily {
    pub fn get(id: FamilyId) -> Self {
        let representation = match id {
            FamilyId::Sl2Zp => Representation::DimensionList(sl2_zp()),
            FamilyId::Sl2Cong => Representation::Factor(FactorForm {
                prefactor: AffineExponent::new(2, 3, 0),
                num: vec![BinomialFactor::minus(AffineExponent::new(-2, 0, -1))],
                den: vec![BinomialFactor::minus(AffineExponent::new(1, 0, -1))],
                num_sums: vec![],
                den_sums: vec![],
            }),
            FamilyId::Sl3Cong => Representation::Factor(FactorForm {
                prefactor: AffineExponent::new(0, 8, 0),
                num: vec![
                    BinomialFactor::minus(AffineExponent::new(-2, 0, -1)),
                    BinomialFactor::minus(AffineExponent::new(-1, 0, -1)),
                ],
                den: rank_two_denominator(),
                // 1 + (p^-1 + p^-2) p^-s + (1 + p^-1) p^-2s + p^{-2-3s}
                num_sums: vec![psum(&[
                    (1, 0, 0),
                    (1, -1, -1),
                    (1, -2, -1),
                    (1, 0, -2),
                    (1, -1, -2),
                    (1, -2, -3),
                ])],
                den_sums: vec![],
            }),
            FamilyId::Su3Cong => Representation::Factor(FactorForm {
                prefactor: AffineExponent::new(0, 8, 0),
                num: vec![
                    BinomialFactor::minus(AffineExponent::new(-2, 0, -1)),
                    BinomialFactor::minus(AffineExponent::new(0, 0, -1)),
                    BinomialFactor::plus(AffineExponent::new(-1, 0, -1)),
                ],
                den: rank_two_denominator(),
                // 1 + (1 - p^-1 + p^-2) p^-s + p^{-2-2s}
                num_sums: vec![psum(&[
                    (1, 0, 0),
                    (1, 0, -1),
                    (-1, -1, -1),
                    (1, -2, -1),
                    (1, -2, -2),
                ])],
                den_sums: vec![],
            }),
        };
        GroupFamily { id, representation }
    }

    pub fn all() -> Vec<GroupFamily> {
        FamilyId::ALL.into_iter().map(GroupFamily::get).collect()
    }

    /// Checks a numeric `p` against the family's hypothesis. Only integral
    /// `p` can violate it.
    pub fn check_prime(&self, p: &BigRational) -> Result<()> {
        if !p.is_integer() {
            return Ok(());
        }
        let n = p.to_integer();
        match self.id {
            FamilyId::Sl2Zp | FamilyId::Sl2Cong if n.is_even() => Err(Error::Constraint(
                alloc::format!("{} needs odd p, got {n}", self.id),
            )),
            FamilyId::Sl3Cong | FamilyId::Su3Cong if n == 3.into() => Err(Error::Constraint(
                alloc::format!("{} needs p != 3", self.id),
            )),
            _ => Ok(()),
        }
    }
}

fn rank_two_denominator() -> Vec<BinomialFactor> {
    vec![
        BinomialFactor::minus(AffineExponent::new(1, 0, -2)),
        BinomialFactor::minus(AffineExponent::new(2, 0, -3)),
    ]
}

/// Terms `(coefficient, a, c)` meaning `coefficient p^{a + cs}`.
fn psum(terms: &[(i64, i64, i64)]) -> PSum {
    PSum::new(
        terms
            .iter()
            .map(|&(k, a, c)| (rat(k), AffineExponent::new(a, 0, c)))
            .collect(),
    )
}

/// `p^{8m} (1 + u(p) p^{-3-2s} + u(1/p) p^{-2-3s} + p^{-5-5s}) / ((1 - p^{1-2s})(1 - p^{2-3s}))`.
pub fn u_form(u: &[(i64, i64)]) -> FactorForm {
    let mut terms = vec![(1, 0, 0), (1, -5, -5)];
    for &(c, k) in u {
        terms.push((c, k - 3, -2));
        terms.push((c, -k - 2, -3));
    }
    FactorForm {
        prefactor: AffineExponent::new(0, 8, 0),
        num: vec![],
        den: rank_two_denominator(),
        num_sums: vec![psum(&terms)],
        den_sums: vec![],
    }
}

fn sl2_zp() -> DimensionListForm {
    let p = |c: &[(i64, i64)]| -> RationalFunction {
        RationalFunction::from_poly(Polynomial::new(
            Var::P,
            c.iter().map(|&(n, d)| ratio(n, d)).collect(),
        ))
    };
    let one = p(&[(1, 1)]);
    let two = p(&[(2, 1)]);
    let half_pm1 = p(&[(-1, 2), (1, 2)]);
    let half_pp1 = p(&[(1, 2), (1, 2)]);
    let half_pm3 = p(&[(-3, 2), (1, 2)]);
    let half_p2m1 = p(&[(-1, 2), (0, 1), (1, 2)]);
    DimensionListForm {
        finite: vec![
            (one.clone(), one.clone()),
            (two.clone(), half_pm1.clone()),
            (two, half_pp1),
            (half_pm1, p(&[(-1, 1), (1, 1)])),
            (one, p(&[(0, 1), (1, 1)])),
            (half_pm3, p(&[(1, 1), (1, 1)])),
        ],
        infinite: vec![
            (p(&[(0, 1), (4, 1)]), half_p2m1.clone()),
            (half_p2m1, p(&[(0, 1), (-1, 1), (1, 1)])),
            (p(&[(1, 2), (-1, 1), (1, 2)]), p(&[(0, 1), (1, 1), (1, 1)])),
        ],
    }
}
