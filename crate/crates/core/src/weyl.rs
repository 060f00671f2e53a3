//! Normal-ordered polynomials in the plus- and minus-type oscillators.
//!
//! Every operator is a finite sum of words `(a₊†)^p (a₊)^q (a₋†)^r (a₋)^s` with
//! exact coefficients. The two modes commute, so a product only needs the
//! single-mode reordering identity
//!
//! ```text
//! a^q (a†)^p = Σ_k  k!·C(q,k)·C(p,k) · (a†)^(p-k) a^(q-k)
//! ```
//!
//! which follows from `[a, a†] = 1`.

use std::cmp::Ordering;
use std::collections::btree_map::{BTreeMap, Entry};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::radical::{Rational, RadicalScalar};

/// Default bound on any single exponent produced by a product.
pub const DEFAULT_MAX_EXPONENT: u32 = 64;

/// The four ladder operators in canonical word order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ladder {
    PlusDag,
    Plus,
    MinusDag,
    Minus,
}

impl Ladder {
    pub const ALL: [Ladder; 4] = [Ladder::PlusDag, Ladder::Plus, Ladder::MinusDag, Ladder::Minus];

    /// Name used in the text rendering.
    pub fn symbol(self) -> &'static str {
        match self {
            Ladder::PlusDag => "apd",
            Ladder::Plus => "ap",
            Ladder::MinusDag => "amd",
            Ladder::Minus => "am",
        }
    }

    pub fn dagger(self) -> Ladder {
        match self {
            Ladder::PlusDag => Ladder::Plus,
            Ladder::Plus => Ladder::PlusDag,
            Ladder::MinusDag => Ladder::Minus,
            Ladder::Minus => Ladder::MinusDag,
        }
    }
}

/// The word `(a₊†)^p (a₊)^q (a₋†)^r (a₋)^s`.
///
/// Ordered graded-lexicographically by `(p+q+r+s, p, q, r, s)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct NormalMonomial {
    pub p: u32,
    pub q: u32,
    pub r: u32,
    pub s: u32,
}

impl NormalMonomial {
    pub const IDENTITY: NormalMonomial = NormalMonomial { p: 0, q: 0, r: 0, s: 0 };

    pub fn new(p: u32, q: u32, r: u32, s: u32) -> Self {
        NormalMonomial { p, q, r, s }
    }

    pub fn generator(g: Ladder) -> Self {
        let mut m = Self::IDENTITY;
        *m.exponent_mut(g) = 1;
        m
    }

    pub fn exponent(&self, g: Ladder) -> u32 {
        match g {
            Ladder::PlusDag => self.p,
            Ladder::Plus => self.q,
            Ladder::MinusDag => self.r,
            Ladder::Minus => self.s,
        }
    }

    fn exponent_mut(&mut self, g: Ladder) -> &mut u32 {
        match g {
            Ladder::PlusDag => &mut self.p,
            Ladder::Plus => &mut self.q,
            Ladder::MinusDag => &mut self.r,
            Ladder::Minus => &mut self.s,
        }
    }

    pub fn degree(&self) -> u32 {
        self.p + self.q + self.r + self.s
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    /// Hermitian conjugate word; already normal ordered.
    pub fn adjoint(&self) -> Self {
        NormalMonomial {
            p: self.q,
            q: self.p,
            r: self.s,
            s: self.r,
        }
    }

    fn key(&self) -> (u32, u32, u32, u32, u32) {
        (self.degree(), self.p, self.q, self.r, self.s)
    }
}

impl Ord for NormalMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for NormalMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for NormalMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for g in Ladder::ALL {
            let e = self.exponent(g);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{}^{}", g.symbol(), e)?;
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// `a^annihilations (a†)^creations` rewritten as `Σ_k c_k (a†)^(creations-k) a^(annihilations-k)`.
fn reorder_coefficients(annihilations: u32, creations: u32) -> Vec<(u32, BigInt)> {
    let top = annihilations.min(creations);
    let mut out = Vec::with_capacity(top as usize + 1);
    let mut c = BigInt::one();
    out.push((0, c.clone()));
    for k in 0..top {
        // c_{k+1} = c_k (q-k)(p-k) / (k+1), always an exact division
        c = c * BigInt::from(annihilations - k) * BigInt::from(creations - k) / BigInt::from(k + 1);
        out.push((k + 1, c.clone()));
    }
    out
}

fn check_exponent(e: u32, limit: u32) -> Result<u32> {
    if e > limit {
        Err(Error::DegreeOverflow {
            exponent: e.into(),
            limit,
        })
    } else {
        Ok(e)
    }
}

/// Normal-ordered expansion of the product of two words.
pub fn monomial_product(
    a: &NormalMonomial,
    b: &NormalMonomial,
    limit: u32,
) -> Result<Vec<(NormalMonomial, BigInt)>> {
    let plus = reorder_coefficients(a.q, b.p);
    let minus = reorder_coefficients(a.s, b.r);
    let p = check_exponent(a.p + b.p, limit)?;
    let q = check_exponent(a.q + b.q, limit)?;
    let r = check_exponent(a.r + b.r, limit)?;
    let s = check_exponent(a.s + b.s, limit)?;
    let mut out = Vec::with_capacity(plus.len() * minus.len());
    for (k, ck) in &plus {
        for (j, cj) in &minus {
            let m = NormalMonomial::new(p - k, q - k, r - j, s - j);
            out.push((m, ck * cj));
        }
    }
    Ok(out)
}

/// A normal-ordered operator polynomial with exact coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct OperatorPoly {
    terms: BTreeMap<NormalMonomial, RadicalScalar>,
}

impl OperatorPoly {
    pub fn zero() -> Self {
        OperatorPoly::default()
    }

    pub fn identity() -> Self {
        Self::scalar(RadicalScalar::one())
    }

    pub fn scalar(c: RadicalScalar) -> Self {
        Self::monomial(NormalMonomial::IDENTITY, c)
    }

    pub fn monomial(m: NormalMonomial, c: RadicalScalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        OperatorPoly { terms }
    }

    pub fn generator(g: Ladder) -> Self {
        Self::monomial(NormalMonomial::generator(g), RadicalScalar::one())
    }

    pub fn ap() -> Self {
        Self::generator(Ladder::Plus)
    }

    pub fn apd() -> Self {
        Self::generator(Ladder::PlusDag)
    }

    pub fn am() -> Self {
        Self::generator(Ladder::Minus)
    }

    pub fn amd() -> Self {
        Self::generator(Ladder::MinusDag)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&NormalMonomial, &RadicalScalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &NormalMonomial) -> RadicalScalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The scalar `c` if this operator is `c·𝟙`.
    pub fn as_scalar(&self) -> Option<RadicalScalar> {
        match self.terms.len() {
            0 => Some(RadicalScalar::zero()),
            1 => self.terms.get(&NormalMonomial::IDENTITY).cloned(),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(NormalMonomial::degree).max().unwrap_or(0)
    }

    /// Largest single-mode creation exponent over all terms.
    pub fn max_creation_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.p.max(m.r)).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: NormalMonomial, c: &RadicalScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &RadicalScalar) -> Self {
        let mut out = Self::zero();
        if c.is_zero() {
            return out;
        }
        for (m, a) in &self.terms {
            out.add_term(*m, &(a * c));
        }
        out
    }

    pub fn scale_rational(&self, k: &Rational) -> Self {
        self.scale(&RadicalScalar::from_rational(k.clone()))
    }

    /// Exact product, rejecting any exponent above `limit`.
    pub fn mul_with_limit(&self, rhs: &Self, limit: u32) -> Result<Self> {
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let c = ca.try_mul(cb)?;
                for (m, k) in monomial_product(ma, mb, limit)? {
                    if k.is_one() {
                        out.add_term(m, &c);
                    } else {
                        out.add_term(m, &c.scale_int(&k));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.mul_with_limit(rhs, DEFAULT_MAX_EXPONENT)
    }

    /// `[self, rhs] = self·rhs − rhs·self`.
    pub fn commutator(&self, rhs: &Self) -> Result<Self> {
        Ok(&self.try_mul(rhs)? - &rhs.try_mul(self)?)
    }

    pub fn pow(&self, exponent: u32) -> Result<Self> {
        let mut acc = Self::identity();
        for _ in 0..exponent {
            acc = acc.try_mul(self)?;
        }
        Ok(acc)
    }

    /// Hermitian adjoint: conjugated coefficients, reversed and daggered words.
    pub fn adjoint(&self) -> Self {
        OperatorPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.adjoint(), c.conj()))
                .collect(),
        }
    }
}

impl<'a> Add<&'a OperatorPoly> for &OperatorPoly {
    type Output = OperatorPoly;
    fn add(self, rhs: &'a OperatorPoly) -> OperatorPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl<'a> Sub<&'a OperatorPoly> for &OperatorPoly {
    type Output = OperatorPoly;
    fn sub(self, rhs: &'a OperatorPoly) -> OperatorPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, &-c);
        }
        out
    }
}

impl Neg for &OperatorPoly {
    type Output = OperatorPoly;
    fn neg(self) -> OperatorPoly {
        OperatorPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for OperatorPoly {
    type Output = OperatorPoly;
    fn neg(self) -> OperatorPoly {
        -&self
    }
}

/// Panics on [`Error::DegreeOverflow`]; use [`OperatorPoly::try_mul`] to handle it.
impl<'a> Mul<&'a OperatorPoly> for &OperatorPoly {
    type Output = OperatorPoly;
    fn mul(self, rhs: &'a OperatorPoly) -> OperatorPoly {
        self.try_mul(rhs).expect("operator product overflowed")
    }
}

impl<'a> Mul<&'a OperatorPoly> for &RadicalScalar {
    type Output = OperatorPoly;
    fn mul(self, rhs: &'a OperatorPoly) -> OperatorPoly {
        rhs.scale(self)
    }
}

macro_rules! forward_owned_binop {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<OperatorPoly> for OperatorPoly {
            type Output = OperatorPoly;
            fn $method(self, rhs: OperatorPoly) -> OperatorPoly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a OperatorPoly> for OperatorPoly {
            type Output = OperatorPoly;
            fn $method(self, rhs: &'a OperatorPoly) -> OperatorPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<OperatorPoly> for &OperatorPoly {
            type Output = OperatorPoly;
            fn $method(self, rhs: OperatorPoly) -> OperatorPoly {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add add, Sub sub, Mul mul);

impl Mul<OperatorPoly> for RadicalScalar {
    type Output = OperatorPoly;
    fn mul(self, rhs: OperatorPoly) -> OperatorPoly {
        rhs.scale(&self)
    }
}

/// Canonical rendering `coef * apd^p ap^q amd^r am^s`, leading (highest graded-lex)
/// term first, terms joined by ` + `, zero exponents omitted.
impl fmt::Display for OperatorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            let coef = if c.is_compound() {
                format!("({c})")
            } else {
                c.to_string()
            };
            if m.is_identity() {
                f.write_str(&coef)?;
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{coef} * {m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radical::int;

    fn num(n: i64) -> RadicalScalar {
        RadicalScalar::from_integer(n)
    }

    #[test]
    fn minus_mode_commutator() {
        let am = OperatorPoly::am();
        let amd = OperatorPoly::amd();
        let expected = &amd * &am + OperatorPoly::identity();
        assert_eq!(&am * &amd, expected);
    }

    #[test]
    fn squared_plus_mode_reordering() {
        let ap2 = OperatorPoly::ap().pow(2).unwrap();
        let apd2 = OperatorPoly::apd().pow(2).unwrap();
        let mut expected = OperatorPoly::monomial(NormalMonomial::new(2, 2, 0, 0), num(1));
        expected.add_term(NormalMonomial::new(1, 1, 0, 0), &num(4));
        expected.add_term(NormalMonomial::IDENTITY, &num(2));
        assert_eq!(&ap2 * &apd2, expected);
    }

    #[test]
    fn cross_mode_products_commute() {
        let prod = &OperatorPoly::ap() * &OperatorPoly::amd();
        assert_eq!(prod, OperatorPoly::monomial(NormalMonomial::new(0, 1, 1, 0), num(1)));
        assert!(OperatorPoly::ap().commutator(&OperatorPoly::amd()).unwrap().is_zero());
    }

    #[test]
    fn degree_overflow_is_reported() {
        let big = OperatorPoly::monomial(NormalMonomial::new(40, 0, 0, 0), num(1));
        assert!(matches!(
            big.try_mul(&big),
            Err(Error::DegreeOverflow { exponent: 80, limit: 64 })
        ));
        assert!(big.mul_with_limit(&big, 100).is_ok());
    }

    #[test]
    fn adjoint_of_generators() {
        assert_eq!(OperatorPoly::ap().adjoint(), OperatorPoly::apd());
        let z = OperatorPoly::amd().scale(&RadicalScalar::i());
        assert_eq!(z.adjoint(), OperatorPoly::am().scale(&-RadicalScalar::i()));
    }

    #[test]
    fn scaling_examples() {
        let n = &OperatorPoly::apd() * &OperatorPoly::ap();
        assert!(n.scale(&RadicalScalar::zero()).is_zero());
        let twice = n.scale_rational(&int(2));
        assert_eq!(twice.coefficient(&NormalMonomial::new(1, 1, 0, 0)), num(2));
    }

    #[test]
    fn canonical_rendering() {
        assert_eq!(OperatorPoly::zero().to_string(), "0");
        let lz = &OperatorPoly::apd() * &OperatorPoly::ap() - &OperatorPoly::amd() * &OperatorPoly::am();
        assert_eq!(lz.to_string(), "apd^1 ap^1 + -1 * amd^1 am^1");
        let mixed = OperatorPoly::ap().scale(&(num(1) + RadicalScalar::i())) + OperatorPoly::identity();
        assert_eq!(mixed.to_string(), "(1 + i) * ap^1 + 1");
    }

    #[test]
    fn graded_lex_order() {
        let a = NormalMonomial::new(0, 0, 3, 0);
        let b = NormalMonomial::new(1, 0, 0, 1);
        let c = NormalMonomial::new(0, 0, 0, 1);
        assert!(c < a && b < a);
        assert!(NormalMonomial::new(0, 2, 0, 0) < b);
    }
}
