//! Integer Laurent polynomials in the variables `Y_{i,k}`.
//!
//! Monomials are sparse exponent maps kept in canonical form (no zero
//! exponents); polynomials map monomials to nonzero arbitrary-precision
//! coefficients. Both orderings are `BTreeMap` orderings, so iteration and
//! rendering are deterministic: factors sort by node, then level.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// The variable `Y_{node, q^level}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct YIndex {
    pub node: u32,
    pub level: i64,
}

impl YIndex {
    pub const fn new(node: u32, level: i64) -> Self {
        Self { node, level }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentMonomial {
    exps: BTreeMap<YIndex, i64>,
}

impl LaurentMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(node: u32, level: i64) -> Self {
        Self::var_pow(node, level, 1)
    }

    pub fn var_pow(node: u32, level: i64, exp: i64) -> Self {
        Self::from_factors([(YIndex::new(node, level), exp)])
    }

    /// Multiplies out `(variable, exponent)` pairs; repeated variables add up.
    pub fn from_factors(factors: impl IntoIterator<Item = (YIndex, i64)>) -> Self {
        let mut m = Self::one();
        for (y, e) in factors {
            m.mul_factor(y, e);
        }
        m
    }

    fn mul_factor(&mut self, y: YIndex, e: i64) {
        if e == 0 {
            return;
        }
        let slot = self.exps.entry(y).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.exps.remove(&y);
        }
    }

    pub fn exponent(&self, y: YIndex) -> i64 {
        self.exps.get(&y).copied().unwrap_or(0)
    }

    /// Factors in canonical order (node ascending, then level ascending).
    pub fn factors(&self) -> impl Iterator<Item = (YIndex, i64)> + '_ {
        self.exps.iter().map(|(&y, &e)| (y, e))
    }

    pub fn num_factors(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (y, e) in other.factors() {
            out.mul_factor(y, e);
        }
        out
    }

    pub fn inverse(&self) -> Self {
        Self { exps: self.exps.iter().map(|(&y, &e)| (y, -e)).collect() }
    }

    pub fn pow(&self, e: i64) -> Self {
        if e == 0 {
            return Self::one();
        }
        Self { exps: self.exps.iter().map(|(&y, &x)| (y, x * e)).collect() }
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inverse())
    }

    /// All exponents nonnegative.
    pub fn is_dominant(&self) -> bool {
        self.exps.values().all(|&e| e >= 0)
    }

    /// All exponents nonpositive.
    pub fn is_antidominant(&self) -> bool {
        self.exps.values().all(|&e| e <= 0)
    }

    pub fn shift_levels(&self, t: i64) -> Self {
        Self {
            exps: self
                .exps
                .iter()
                .map(|(y, &e)| (YIndex::new(y.node, y.level + t), e))
                .collect(),
        }
    }

    /// Smallest level carrying a nonzero exponent.
    pub fn min_level(&self) -> Option<i64> {
        self.exps.keys().map(|y| y.level).min()
    }

    pub fn max_level(&self) -> Option<i64> {
        self.exps.keys().map(|y| y.level).max()
    }
}

pub fn mono_mul(a: &LaurentMonomial, b: &LaurentMonomial) -> LaurentMonomial {
    a.mul(b)
}

impl fmt::Display for LaurentMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (idx, (y, e)) in self.factors().enumerate() {
            if idx > 0 {
                f.write_str("*")?;
            }
            write!(f, "Y[{},{}]", y.node, y.level)?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentMonomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "1" {
            return Ok(Self::one());
        }
        let bad = || Error::Parse(format!("malformed monomial `{s}`"));
        let mut factors = Vec::new();
        for part in s.split('*') {
            let part = part.trim();
            let body = part.strip_prefix("Y[").ok_or_else(bad)?;
            let (inner, rest) = body.split_once(']').ok_or_else(bad)?;
            let (node, level) = inner.split_once(',').ok_or_else(bad)?;
            let node: u32 = node.trim().parse().map_err(|_| bad())?;
            let level: i64 = level.trim().parse().map_err(|_| bad())?;
            let exp: i64 = match rest.strip_prefix('^') {
                Some(e) => e.parse().map_err(|_| bad())?,
                None if rest.is_empty() => 1,
                None => return Err(bad()),
            };
            factors.push((YIndex::new(node, level), exp));
        }
        Ok(Self::from_factors(factors))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    terms: BTreeMap<LaurentMonomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        LaurentMonomial::one().into()
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

    pub fn terms(&self) -> impl Iterator<Item = (&LaurentMonomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &LaurentMonomial> {
        self.terms.keys()
    }

    pub fn coefficient(&self, m: &LaurentMonomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, m: LaurentMonomial, c: impl Into<BigInt>) {
        let c = c.into();
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Multiplies every term by `m`.
    pub fn mul_monomial(&self, m: &LaurentMonomial) -> Self {
        Self { terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    pub fn shift_levels(&self, t: i64) -> Self {
        Self { terms: self.terms.iter().map(|(k, c)| (k.shift_levels(t), c.clone())).collect() }
    }

    pub fn dominant_monomials(&self) -> Vec<&LaurentMonomial> {
        self.monomials().filter(|m| m.is_dominant()).collect()
    }

    pub fn antidominant_monomials(&self) -> Vec<&LaurentMonomial> {
        self.monomials().filter(|m| m.is_antidominant()).collect()
    }

    /// True when every coefficient equals 1.
    pub fn is_multiplicity_free(&self) -> bool {
        self.terms.values().all(One::is_one)
    }
}

impl From<LaurentMonomial> for LaurentPoly {
    fn from(m: LaurentMonomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, 1);
        p
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl FromIterator<LaurentMonomial> for LaurentPoly {
    fn from_iter<I: IntoIterator<Item = LaurentMonomial>>(iter: I) -> Self {
        let mut p = LaurentPoly::zero();
        for m in iter {
            p.add_term(m, 1);
        }
        p
    }
}

pub fn poly_add(p: &LaurentPoly, q: &LaurentPoly) -> LaurentPoly {
    p + q
}

pub fn poly_sub(p: &LaurentPoly, q: &LaurentPoly) -> LaurentPoly {
    p - q
}

pub fn poly_mul(p: &LaurentPoly, q: &LaurentPoly) -> LaurentPoly {
    p * q
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            match (idx, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut out = Self::zero();
        let mut rest = s;
        let mut negative = false;
        if let Some(r) = rest.strip_prefix('-') {
            negative = true;
            rest = r;
        }
        loop {
            let next = [" + ", " - "]
                .iter()
                .filter_map(|sep| rest.find(sep).map(|at| (at, *sep)))
                .min();
            let (term, tail) = match next {
                Some((at, sep)) => (&rest[..at], Some((&rest[at + sep.len()..], sep == " - "))),
                None => (rest, None),
            };
            let (coeff, mono) = parse_term(term)?;
            out.add_term(mono, if negative { -coeff } else { coeff });
            match tail {
                Some((t, neg)) => {
                    rest = t;
                    negative = neg;
                }
                None => break,
            }
        }
        Ok(out)
    }
}

fn parse_term(term: &str) -> Result<(BigInt, LaurentMonomial), Error> {
    let term = term.trim();
    if term.starts_with(|c: char| c.is_ascii_digit()) {
        let (digits, mono) = match term.split_once('*') {
            Some((d, m)) => (d, m.parse()?),
            None => (term, LaurentMonomial::one()),
        };
        let coeff = digits
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("bad coefficient `{digits}`")))?;
        Ok((coeff, mono))
    } else {
        Ok((BigInt::one(), term.parse()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono(s: &str) -> LaurentMonomial {
        s.parse().unwrap()
    }

    fn poly(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn monomial_multiplication() {
        assert_eq!(mono("Y[2,1]*Y[1,2]^-1").mul(&mono("Y[1,2]")), mono("Y[2,1]"));
        let m = mono("Y[3,4]^-2*Y[1,0]");
        assert_eq!(LaurentMonomial::one().mul(&m), m);
        assert_eq!(mono_mul(&m, &m.inverse()), LaurentMonomial::one());
    }

    #[test]
    fn multiply_by_inverse_a_variable() {
        let c = crate::cartan::cartan_c(3).unwrap();
        let a = c.a_variable(3, 2).unwrap();
        assert_eq!(mono("Y[3,0]").div(&a), mono("Y[2,1]*Y[2,3]*Y[3,4]^-1"));
    }

    #[test]
    fn dominance() {
        assert!(mono("Y[2,1]").is_dominant());
        assert!(!mono("Y[2,1]").is_antidominant());
        assert!(mono("Y[2,9]^-1").is_antidominant());
        assert!(!mono("Y[2,9]^-1").is_dominant());
        let neither = mono("Y[3,2]*Y[2,3]^-1");
        assert!(!neither.is_dominant() && !neither.is_antidominant());
        let one = LaurentMonomial::one();
        assert!(one.is_dominant() && one.is_antidominant());
    }

    #[test]
    fn rendering_is_canonical() {
        let m = LaurentMonomial::from_factors([
            (YIndex::new(2, 1), 1),
            (YIndex::new(1, 2), -1),
            (YIndex::new(1, 0), 2),
            (YIndex::new(4, 4), 0),
        ]);
        assert_eq!(m.to_string(), "Y[1,0]^2*Y[1,2]^-1*Y[2,1]");
        assert_eq!(LaurentMonomial::one().to_string(), "1");
        let p = poly("Y[1,4]^-1 - 3*Y[2,1] + 7");
        assert_eq!(p.to_string(), "7 + Y[1,4]^-1 - 3*Y[2,1]");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(poly("-Y[1,0]").to_string(), "-Y[1,0]");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("Y[1]".parse::<LaurentMonomial>().is_err());
        assert!("X[1,2]".parse::<LaurentMonomial>().is_err());
        assert!("Y[1,2]^x".parse::<LaurentMonomial>().is_err());
        assert!("Y[1,2]junk".parse::<LaurentMonomial>().is_err());
    }

    #[test]
    fn shift() {
        assert_eq!(poly("Y[1,0]").shift_levels(2), poly("Y[1,2]"));
        let p = poly("Y[1,0] + Y[2,1]*Y[1,2]^-1");
        assert_eq!(p.shift_levels(0), p);
        assert_eq!(p.shift_levels(3).shift_levels(-3), p);
    }

    #[test]
    fn ring_basics() {
        let p = poly("Y[1,0] + Y[1,4]^-1");
        assert!((&p + &(-&p)).is_zero());
        assert_eq!(&p * &LaurentPoly::one(), p);
        let table = [
            "Y[1,0]",
            "Y[1,2]^-1*Y[2,1]",
            "Y[2,3]^-1*Y[3,2]",
            "Y[2,5]*Y[3,6]^-1",
            "Y[1,6]*Y[2,7]^-1",
            "Y[1,8]^-1",
        ];
        let forward: LaurentPoly = table.iter().map(|s| mono(s)).collect();
        let backward: LaurentPoly = table.iter().rev().map(|s| mono(s)).collect();
        assert!((forward - backward).is_zero());
    }

    #[test]
    fn big_coefficients_do_not_overflow() {
        let p = poly("Y[1,0] + 1");
        let mut acc = LaurentPoly::one();
        for _ in 0..80 {
            acc = &acc * &p;
        }
        // central binomial coefficient C(80, 40) exceeds u64
        let c = acc.coefficient(&mono("Y[1,0]^40"));
        assert_eq!(c.to_string(), "107507208733336176461620");
    }

    fn arb_monomial() -> impl Strategy<Value = LaurentMonomial> {
        prop::collection::vec(((1u32..=3, -3i64..=3), -3i64..=3), 0..4).prop_map(|v| {
            LaurentMonomial::from_factors(v.into_iter().map(|((n, l), e)| (YIndex::new(n, l), e)))
        })
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((arb_monomial(), -5i64..=5), 0..=8).prop_map(|v| {
            let mut p = LaurentPoly::zero();
            for (m, c) in v {
                p.add_term(m, c);
            }
            p
        })
    }

    proptest! {
        #[test]
        fn text_round_trip(p in arb_poly()) {
            let back: LaurentPoly = p.to_string().parse().unwrap();
            prop_assert_eq!(back, p);
        }

        #[test]
        fn monomial_text_round_trip(m in arb_monomial()) {
            prop_assert_eq!(m.to_string().parse::<LaurentMonomial>().unwrap(), m);
        }

        #[test]
        fn both_dominant_and_antidominant_iff_one(m in arb_monomial()) {
            prop_assert_eq!(m.is_dominant() && m.is_antidominant(), m.is_one());
        }

        #[test]
        fn distributive(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        }

        #[test]
        fn commutative_and_associative(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&p + &q, &q + &p);
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        }

        #[test]
        fn no_zero_coefficients(p in arb_poly(), q in arb_poly()) {
            let prod = &p * &q;
            let diff = &p - &q;
            for (_, c) in prod.terms().chain(diff.terms()) {
                prop_assert!(!c.is_zero());
            }
        }
    }
}
