//! Witten L-functions of finite groups given by character tables.
//!
//! For a finite group `G` and `g` in `G`,
//! `zeta(s, g) = sum_rho chi_rho(g) deg(rho)^{-s-1}`. At `s = -2` this is
//! `|G|` at the identity and `0` elsewhere (column orthogonality), and its
//! average over `G` is `1` for every `s`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::to_f64;
use crate::numerics::pow_neg;

/// `re + im i` with rational parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        GaussianRational {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        GaussianRational {
            re: &self.re * c,
            im: &self.im * c,
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(to_f64(&self.re), to_f64(&self.im))
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: Self) -> GaussianRational {
        GaussianRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: Self) -> GaussianRational {
        GaussianRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: Self) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let im_abs = self.im.abs();
        let im_str = if im_abs.is_one() {
            String::new()
        } else {
            im_abs.to_string()
        };
        if self.re.is_zero() {
            let sign = if self.im.is_negative() { "-" } else { "" };
            return write!(f, "{sign}{im_str}i");
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{}{sign}{im_str}i", self.re)
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    if n.is_empty() || d.is_empty() || d.starts_with(['+', '-']) {
        return None;
    }
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

impl FromStr for GaussianRational {
    type Err = Error;

    /// Accepts `a/b`, `c/di`, `a/b+c/di`, `a/b-c/di`, `i`, `-i` and the like.
    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::domain(format!("malformed Gaussian rational '{text}'"));
        let t = text.trim();
        if t.is_empty() || t.contains(char::is_whitespace) {
            return Err(bad());
        }
        let Some(body) = t.strip_suffix('i') else {
            return parse_rational(t).map(Self::real).ok_or_else(bad);
        };
        // split at the last sign that is not the leading one
        let split = body
            .char_indices()
            .skip(1)
            .filter(|(_, c)| *c == '+' || *c == '-')
            .map(|(i, _)| i)
            .last();
        let (re_part, im_part) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("", body),
        };
        let re = if re_part.is_empty() {
            BigRational::zero()
        } else {
            parse_rational(re_part).ok_or_else(bad)?
        };
        let im = match im_part {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            other => parse_rational(other.strip_prefix('+').unwrap_or(other)).ok_or_else(bad)?,
        };
        Ok(GaussianRational { re, im })
    }
}

/// One conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub label: String,
    pub size: u64,
}

/// One irreducible character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Irrep {
    pub degree: u64,
    pub chars: Vec<GaussianRational>,
}

/// A validated character table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    name: String,
    order: u64,
    classes: Vec<ConjugacyClass>,
    irreps: Vec<Irrep>,
    identity: usize,
}

impl CharacterTable {
    /// Checks class sizes, degrees, row orthogonality and locates the
    /// identity class.
    pub fn new(
        name: &str,
        order: u64,
        classes: Vec<ConjugacyClass>,
        irreps: Vec<Irrep>,
    ) -> Result<Self> {
        if order == 0 {
            return Err(Error::Constraint("group order must be positive".into()));
        }
        if classes.is_empty() || classes.iter().any(|c| c.size == 0) {
            return Err(Error::Constraint("class sizes must be positive".into()));
        }
        let total: u64 = classes.iter().map(|c| c.size).sum();
        if total != order {
            return Err(Error::Constraint(format!(
                "class sizes sum to {total}, expected {order}"
            )));
        }
        if irreps.is_empty() {
            return Err(Error::Constraint("no irreducible characters".into()));
        }
        for (i, r) in irreps.iter().enumerate() {
            if r.chars.len() != classes.len() {
                return Err(Error::Constraint(format!(
                    "irrep {} has {} values for {} classes",
                    i + 1,
                    r.chars.len(),
                    classes.len()
                )));
            }
            if r.degree == 0 {
                return Err(Error::Constraint(format!("irrep {} has degree 0", i + 1)));
            }
        }
        let degrees: u64 = irreps.iter().map(|r| r.degree * r.degree).sum();
        if degrees != order {
            return Err(Error::Constraint(format!(
                "squared degrees sum to {degrees}, expected {order}"
            )));
        }
        let identity = (0..classes.len())
            .find(|&c| {
                classes[c].size == 1
                    && irreps
                        .iter()
                        .all(|r| r.chars[c] == GaussianRational::from_int(r.degree as i64))
            })
            .ok_or_else(|| {
                Error::Constraint("no class where every character equals its degree".into())
            })?;
        for i in 0..irreps.len() {
            for j in i..irreps.len() {
                let mut acc = GaussianRational::zero();
                for (c, class) in classes.iter().enumerate() {
                    let term = &irreps[i].chars[c] * &irreps[j].chars[c].conj();
                    acc = &acc + &term.scale(&BigRational::from_integer(BigInt::from(class.size)));
                }
                let want = if i == j { order as i64 } else { 0 };
                if acc != GaussianRational::from_int(want) {
                    return Err(Error::Constraint(format!(
                        "rows {} and {} fail orthogonality: got {acc}, expected {want}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(CharacterTable {
            name: name.into(),
            order,
            classes,
            irreps,
            identity,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn irreps(&self) -> &[Irrep] {
        &self.irreps
    }

    pub fn identity_class(&self) -> usize {
        self.identity
    }

    /// Index of the class with the given label.
    pub fn class_index(&self, label: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.label == label)
    }

    /// Symmetric group on three letters.
    pub fn s3() -> Self {
        let classes = labelled(&[("1", 1), ("(12)", 3), ("(123)", 2)]);
        let irreps = int_irreps(&[(1, &[1, 1, 1]), (1, &[1, -1, 1]), (2, &[2, 0, -1])]);
        Self::new("S3", 6, classes, irreps).expect("S3 table is valid")
    }

    /// Quaternion group of order 8.
    pub fn q8() -> Self {
        let classes = labelled(&[("1", 1), ("-1", 1), ("i", 2), ("j", 2), ("k", 2)]);
        let irreps = int_irreps(&[
            (1, &[1, 1, 1, 1, 1]),
            (1, &[1, 1, 1, -1, -1]),
            (1, &[1, 1, -1, 1, -1]),
            (1, &[1, 1, -1, -1, 1]),
            (2, &[2, -2, 0, 0, 0]),
        ]);
        Self::new("Q8", 8, classes, irreps).expect("Q8 table is valid")
    }

    /// Built-in table by name (`S3` or `Q8`, case-insensitive).
    pub fn builtin(name: &str) -> Option<Self> {
        match name.to_ascii_lowercase().as_str() {
            "s3" => Some(Self::s3()),
            "q8" => Some(Self::q8()),
            _ => None,
        }
    }
}

fn labelled(items: &[(&str, u64)]) -> Vec<ConjugacyClass> {
    items
        .iter()
        .map(|(l, n)| ConjugacyClass {
            label: (*l).into(),
            size: *n,
        })
        .collect()
}

fn int_irreps(rows: &[(u64, &[i64])]) -> Vec<Irrep> {
    rows.iter()
        .map(|(d, chi)| Irrep {
            degree: *d,
            chars: chi.iter().map(|c| GaussianRational::from_int(*c)).collect(),
        })
        .collect()
}

fn check_class(table: &CharacterTable, class: usize) -> Result<()> {
    if class >= table.classes.len() {
        return Err(Error::domain(format!(
            "class index {class} out of range (table has {} classes)",
            table.classes.len()
        )));
    }
    Ok(())
}

/// Exact `sum_rho chi_rho(g) deg(rho)^{-s-1}` at an integer `s`.
pub fn finite_witten_l_exact(
    table: &CharacterTable,
    s: i64,
    class: usize,
) -> Result<GaussianRational> {
    check_class(table, class)?;
    let e = -s - 1;
    let mut acc = GaussianRational::zero();
    for r in &table.irreps {
        let d = BigRational::from_integer(BigInt::from(r.degree));
        acc = &acc + &r.chars[class].scale(&d.pow(e as i32));
    }
    Ok(acc)
}

/// `sum_rho chi_rho(g) deg(rho)^{-s-1}`; exact arithmetic at integer `s`.
pub fn finite_witten_l(table: &CharacterTable, s: Complex64, class: usize) -> Result<Complex64> {
    check_class(table, class)?;
    if s.im == 0.0 && s.re.fract() == 0.0 && s.re.abs() < 1e3 {
        return Ok(finite_witten_l_exact(table, s.re as i64, class)?.to_complex());
    }
    let mut acc = Complex64::zero();
    for r in &table.irreps {
        acc += r.chars[class].to_complex() * pow_neg(r.degree as f64, s + 1.0);
    }
    Ok(acc)
}

/// `(1/|G|) sum_classes |C| zeta(s, C)`, which is `1`.
pub fn haar_average_finite(table: &CharacterTable, s: Complex64) -> Result<Complex64> {
    let mut acc = Complex64::zero();
    for (c, class) in table.classes.iter().enumerate() {
        acc += finite_witten_l(table, s, c)? * class.size as f64;
    }
    Ok(acc / table.order as f64)
}

/// Exact Haar average at an integer `s`.
pub fn haar_average_finite_exact(table: &CharacterTable, s: i64) -> Result<GaussianRational> {
    let mut acc = GaussianRational::zero();
    for (c, class) in table.classes.iter().enumerate() {
        let v = finite_witten_l_exact(table, s, c)?;
        acc = &acc + &v.scale(&BigRational::from_integer(BigInt::from(class.size)));
    }
    Ok(acc.scale(&BigRational::new(BigInt::one(), BigInt::from(table.order))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;
    use proptest::prelude::*;

    fn g(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn parse_gaussian() {
        assert_eq!(g("3"), GaussianRational::from_int(3));
        assert_eq!(g("-1/2"), GaussianRational::real(ratio(-1, 2)));
        assert_eq!(
            g("1/2+3/4i"),
            GaussianRational::new(ratio(1, 2), ratio(3, 4))
        );
        assert_eq!(
            g("1/2-3/4i"),
            GaussianRational::new(ratio(1, 2), ratio(-3, 4))
        );
        assert_eq!(g("i"), GaussianRational::new(ratio(0, 1), ratio(1, 1)));
        assert_eq!(g("-i"), GaussianRational::new(ratio(0, 1), ratio(-1, 1)));
        assert_eq!(g("-2i"), GaussianRational::new(ratio(0, 1), ratio(-2, 1)));
        assert_eq!(g("-1+i"), GaussianRational::new(ratio(-1, 1), ratio(1, 1)));
        assert_eq!(g("2/4"), GaussianRational::real(ratio(1, 2)));
        for bad in ["", "1/0", "a", "1 + i", "1/-2", "1//2", "ii", "1/2+"] {
            assert!(bad.parse::<GaussianRational>().is_err(), "{bad}");
        }
    }

    #[test]
    fn display_round_trip() {
        for s in ["0", "3", "-1/2", "i", "-i", "1/2+3/4i", "-5-2/3i", "7/3i"] {
            assert_eq!(g(s).to_string(), s);
        }
    }

    proptest! {
        #[test]
        fn gaussian_display_parses_back(a in -50i64..50, b in 1i64..20, c in -50i64..50, d in 1i64..20) {
            let z = GaussianRational::new(ratio(a, b), ratio(c, d));
            prop_assert_eq!(z.to_string().parse::<GaussianRational>().unwrap(), z);
        }
    }

    #[test]
    fn examples() {
        let s3 = CharacterTable::s3();
        let q8 = CharacterTable::q8();
        let e = |t: &CharacterTable, s: i64, c: usize| finite_witten_l_exact(t, s, c).unwrap();
        assert_eq!(e(&s3, -2, 0), GaussianRational::from_int(6));
        assert_eq!(e(&s3, -2, 1), GaussianRational::zero());
        // at the identity the sum is sum deg^{-s}: the number of irreps at s = 0
        assert_eq!(e(&q8, 0, 0), GaussianRational::from_int(5));
        let v = finite_witten_l(&q8, Complex64::new(0.0, 0.0), 0).unwrap();
        assert_eq!(v, Complex64::new(5.0, 0.0));
        // sum deg^{-1} is the value at s = 1
        assert_eq!(e(&q8, 1, 0), GaussianRational::real(ratio(9, 2)));
    }

    #[test]
    fn minus_two_detects_identity() {
        for t in [CharacterTable::s3(), CharacterTable::q8()] {
            for c in 0..t.classes().len() {
                let want = if c == t.identity_class() {
                    t.order() as i64
                } else {
                    0
                };
                assert_eq!(
                    finite_witten_l_exact(&t, -2, c).unwrap(),
                    GaussianRational::from_int(want)
                );
            }
        }
    }

    #[test]
    fn haar_average_is_one() {
        let s3 = CharacterTable::s3();
        let q8 = CharacterTable::q8();
        assert_eq!(
            haar_average_finite_exact(&s3, -2).unwrap(),
            GaussianRational::from_int(1)
        );
        assert_eq!(
            haar_average_finite_exact(&q8, -1).unwrap(),
            GaussianRational::from_int(1)
        );
        let v = haar_average_finite(&s3, Complex64::new(3.7, 0.0)).unwrap();
        assert!((v - 1.0).norm() < 1e-15);
        // fixed pseudo-random complex points
        let pts = [
            (0.31, -2.2),
            (-4.7, 0.9),
            (12.5, 3.3),
            (-0.5, -7.1),
            (2.0, 40.0),
            (-13.2, -0.4),
            (6.6, 6.6),
            (0.01, 0.02),
            (-1.5, 19.0),
            (9.9, -25.0),
        ];
        for (re, im) in pts {
            for t in [&s3, &q8] {
                let v = haar_average_finite(t, Complex64::new(re, im)).unwrap();
                assert!((v - 1.0).norm() < 1e-12, "s = {re}+{im}i");
            }
        }
    }

    #[test]
    fn rejects_broken_tables() {
        let classes = labelled(&[("1", 1), ("(12)", 3), ("(123)", 2)]);
        let bad_row = int_irreps(&[(1, &[1, 1, 1]), (1, &[1, -1, 1]), (2, &[2, 0, 1])]);
        assert!(matches!(
            CharacterTable::new("S3", 6, classes.clone(), bad_row),
            Err(Error::Constraint(_))
        ));
        let short = int_irreps(&[(1, &[1, 1]), (1, &[1, -1, 1]), (2, &[2, 0, -1])]);
        assert!(CharacterTable::new("S3", 6, classes.clone(), short).is_err());
        let good = int_irreps(&[(1, &[1, 1, 1]), (1, &[1, -1, 1]), (2, &[2, 0, -1])]);
        assert!(CharacterTable::new("S3", 7, classes, good).is_err());
        assert!(finite_witten_l(&CharacterTable::s3(), Complex64::new(1.0, 0.0), 3).is_err());
    }

    #[test]
    fn cyclic_group_with_complex_characters() {
        // Z/4 with characters i^{jk}
        let classes = labelled(&[("0", 1), ("1", 1), ("2", 1), ("3", 1)]);
        let rows: Vec<Irrep> = ["1 1 1 1", "1 i -1 -i", "1 -1 1 -1", "1 -i -1 i"]
            .iter()
            .map(|r| Irrep {
                degree: 1,
                chars: r.split(' ').map(g).collect(),
            })
            .collect();
        let t = CharacterTable::new("C4", 4, classes, rows).unwrap();
        assert_eq!(
            finite_witten_l_exact(&t, -2, 0).unwrap(),
            GaussianRational::from_int(4)
        );
        assert_eq!(
            finite_witten_l_exact(&t, -2, 1).unwrap(),
            GaussianRational::zero()
        );
        assert_eq!(t.class_index("2"), Some(2));
    }
}
