//! Exact scalars over the Gaussian rationals extended by square roots.
//!
//! A [`RadicalScalar`] is a finite sum `Σ (u_r + i v_r) √r` over squarefree
//! positive radicands `r`, stored sparsely by radicand. Products of radicals
//! are merged without factoring: for squarefree `r` and `s` with `g = gcd(r, s)`,
//! `√r √s = g √((r/g)(s/g))` and the new radicand is again squarefree.

use std::collections::btree_map::{BTreeMap, Entry};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Largest radicand accepted after square extraction.
pub const MAX_RADICAND: u64 = i64::MAX as u64;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Splits `n` into `(s, f)` with `n = s² f` and `f` squarefree.
///
/// Trial division runs only up to the cube root of the unfactored part; what
/// remains then has at most two prime factors and is either a perfect square
/// or squarefree.
pub fn squarefree_split(mut n: u128) -> (u128, u128) {
    assert!(n > 0, "squarefree_split of zero");
    let mut square = 1u128;
    let mut free = 1u128;
    let mut divide_out = |n: &mut u128, p: u128| {
        let mut e = 0;
        while n.is_multiple_of(p) {
            *n /= p;
            e += 1;
        }
        for _ in 0..e / 2 {
            square *= p;
        }
        if e % 2 == 1 {
            free *= p;
        }
    };
    divide_out(&mut n, 2);
    let mut p = 3u128;
    while p.checked_pow(3).is_some_and(|cube| cube <= n) {
        divide_out(&mut n, p);
        p += 2;
    }
    if n > 1 {
        let root = n.sqrt();
        if root * root == n {
            square *= root;
        } else {
            free *= n;
        }
    }
    (square, free)
}

/// A Gaussian rational `re + i·im`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn mul(&self, other: &Self) -> Self {
        GaussianRational {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }

    fn scale(&self, k: &Rational) -> Self {
        GaussianRational {
            re: &self.re * k,
            im: &self.im * k,
        }
    }

    fn add_assign(&mut self, other: &Self) {
        self.re += &other.re;
        self.im += &other.im;
    }

    fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }
}

/// Exact element of ℚ(i) adjoined square roots of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RadicalScalar {
    terms: BTreeMap<u64, GaussianRational>,
}

fn merge_radicands(r: u64, s: u64) -> Result<(u64, u64)> {
    let g = r.gcd(&s);
    let merged = u128::from(r / g) * u128::from(s / g);
    if merged > u128::from(MAX_RADICAND) {
        return Err(Error::RadicandOverflow(merged.to_string()));
    }
    Ok((g, merged as u64))
}

impl RadicalScalar {
    pub fn zero() -> Self {
        RadicalScalar::default()
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::from_gaussian(1, GaussianRational::new(Rational::zero(), Rational::one()))
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::from_gaussian(1, GaussianRational::new(q, Rational::zero()))
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    /// `c·√radicand`; the radicand must already be squarefree.
    pub fn from_gaussian(radicand: u64, c: GaussianRational) -> Self {
        debug_assert!(squarefree_split(radicand.into()).0 == 1);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(radicand, c);
        }
        RadicalScalar { terms }
    }

    /// Exact square root of a positive rational `p/d`, i.e. `√(p·d)/d`.
    pub fn sqrt_rational(q: &Rational) -> Result<Self> {
        if !q.is_positive() {
            return Err(Error::NonPositiveRadicand(q.clone()));
        }
        let to_u128 = |n: &BigInt| {
            n.to_u128()
                .ok_or_else(|| Error::RadicandOverflow(n.to_string()))
        };
        let p = to_u128(q.numer())?;
        let d = to_u128(q.denom())?;
        let (sp, fp) = squarefree_split(p);
        let (sd, fd) = squarefree_split(d);
        let g = fp.gcd(&fd);
        let radicand = (fp / g)
            .checked_mul(fd / g)
            .filter(|&r| r <= u128::from(MAX_RADICAND))
            .ok_or_else(|| Error::RadicandOverflow(format!("{fp}*{fd}")))?;
        let outside = BigInt::from(sp) * BigInt::from(sd) * BigInt::from(g);
        let coeff = Rational::new(outside, q.denom().clone());
        Ok(Self::from_gaussian(
            radicand as u64,
            GaussianRational::new(coeff, Rational::zero()),
        ))
    }

    /// Exact `√n` for a positive integer.
    pub fn sqrt_integer(n: u64) -> Self {
        assert!(n > 0, "sqrt_integer of zero");
        let (s, f) = squarefree_split(n.into());
        Self::from_gaussian(
            f as u64,
            GaussianRational::new(Rational::from_integer(BigInt::from(s)), Rational::zero()),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_one())
    }

    /// Terms as `(radicand, coefficient)`, ordered by radicand.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &GaussianRational)> {
        self.terms.iter().map(|(&r, c)| (r, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// The value as a rational, if it has no radical or imaginary part.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let c = self.terms.get(&1)?;
                c.im.is_zero().then(|| c.re.clone())
            }
            _ => None,
        }
    }

    /// True when the text rendering has more than one summand.
    pub fn is_compound(&self) -> bool {
        self.terms
            .values()
            .map(|c| usize::from(!c.re.is_zero()) + usize::from(!c.im.is_zero()))
            .sum::<usize>()
            > 1
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(|c| c.im.is_zero())
    }

    pub fn conj(&self) -> Self {
        RadicalScalar {
            terms: self.terms.iter().map(|(&r, c)| (r, c.conj())).collect(),
        }
    }

    /// `a · conj(a)`; real and non-negative.
    pub fn norm_sqr(&self) -> Self {
        self * &self.conj()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        RadicalScalar {
            terms: self.terms.iter().map(|(&r, c)| (r, c.scale(k))).collect(),
        }
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        self.scale(&Rational::from_integer(k.clone()))
    }

    fn add_term(&mut self, radicand: u64, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(radicand) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                e.get_mut().add_assign(c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (&r, a) in &self.terms {
            for (&s, b) in &other.terms {
                let (outside, radicand) = merge_radicands(r, s)?;
                let mut c = a.mul(b);
                if outside != 1 {
                    c = c.scale(&Rational::from_integer(BigInt::from(outside)));
                }
                out.add_term(radicand, &c);
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse of a single-radicand value `c·√r`.
    ///
    /// Returns `None` for zero and for sums over several radicands.
    pub fn inverse_monomial(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&r, c) = self.terms.iter().next()?;
        // (c√r)⁻¹ = conj(c)·√r / (|c|²·r)
        let denom = c.norm_sqr() * Rational::from_integer(BigInt::from(r));
        Some(Self::from_gaussian(r, c.conj().scale(&denom.recip())))
    }

    pub fn pow(&self, exponent: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exponent {
            acc = &acc * self;
        }
        acc
    }

    /// Double-precision evaluation, summed in radicand order.
    pub fn to_complex(&self) -> Complex64 {
        let mut z = Complex64::new(0.0, 0.0);
        for (&r, c) in &self.terms {
            let root = (r as f64).sqrt();
            let re = c.re.to_f64().unwrap_or(f64::NAN);
            let im = c.im.to_f64().unwrap_or(f64::NAN);
            z += Complex64::new(re * root, im * root);
        }
        z
    }
}

impl From<Rational> for RadicalScalar {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

impl From<i64> for RadicalScalar {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl<'a> Add<&'a RadicalScalar> for &RadicalScalar {
    type Output = RadicalScalar;
    fn add(self, rhs: &'a RadicalScalar) -> RadicalScalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> AddAssign<&'a RadicalScalar> for RadicalScalar {
    fn add_assign(&mut self, rhs: &'a RadicalScalar) {
        for (&r, c) in &rhs.terms {
            self.add_term(r, c);
        }
    }
}

impl<'a> SubAssign<&'a RadicalScalar> for RadicalScalar {
    fn sub_assign(&mut self, rhs: &'a RadicalScalar) {
        for (&r, c) in &rhs.terms {
            self.add_term(r, &GaussianRational::new(-&c.re, -&c.im));
        }
    }
}

impl<'a> Sub<&'a RadicalScalar> for &RadicalScalar {
    type Output = RadicalScalar;
    fn sub(self, rhs: &'a RadicalScalar) -> RadicalScalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &RadicalScalar {
    type Output = RadicalScalar;
    fn neg(self) -> RadicalScalar {
        self.scale(&-Rational::one())
    }
}

impl Neg for RadicalScalar {
    type Output = RadicalScalar;
    fn neg(self) -> RadicalScalar {
        -&self
    }
}

/// Panics if a merged radicand exceeds [`MAX_RADICAND`]; see [`RadicalScalar::try_mul`].
impl<'a> Mul<&'a RadicalScalar> for &RadicalScalar {
    type Output = RadicalScalar;
    fn mul(self, rhs: &'a RadicalScalar) -> RadicalScalar {
        self.try_mul(rhs).expect("radicand overflow in RadicalScalar product")
    }
}

macro_rules! forward_owned_binop {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<RadicalScalar> for RadicalScalar {
            type Output = RadicalScalar;
            fn $method(self, rhs: RadicalScalar) -> RadicalScalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a RadicalScalar> for RadicalScalar {
            type Output = RadicalScalar;
            fn $method(self, rhs: &'a RadicalScalar) -> RadicalScalar {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add add, Sub sub, Mul mul);

impl Zero for RadicalScalar {
    fn zero() -> Self {
        RadicalScalar::zero()
    }
    fn is_zero(&self) -> bool {
        RadicalScalar::is_zero(self)
    }
}

impl One for RadicalScalar {
    fn one() -> Self {
        RadicalScalar::one()
    }
}

fn write_part(
    f: &mut fmt::Formatter<'_>,
    coeff: &Rational,
    unit: &str,
    first: &mut bool,
) -> fmt::Result {
    if coeff.is_zero() {
        return Ok(());
    }
    if !*first {
        f.write_str(" + ")?;
    }
    *first = false;
    if unit.is_empty() {
        return write!(f, "{coeff}");
    }
    if coeff.is_one() {
        f.write_str(unit)
    } else if (-coeff).is_one() {
        write!(f, "-{unit}")
    } else {
        write!(f, "{coeff}*{unit}")
    }
}

/// Renders as `1/2*sqrt(2) + 3*i`, radicands ascending, real before imaginary.
impl fmt::Display for RadicalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&r, c) in &self.terms {
            let (re_unit, im_unit) = if r == 1 {
                (String::new(), "i".to_string())
            } else {
                (format!("sqrt({r})"), format!("i*sqrt({r})"))
            };
            write_part(f, &c.re, &re_unit, &mut first)?;
            write_part(f, &c.im, &im_unit, &mut first)?;
        }
        Ok(())
    }
}
