//! Two-mode Fock representation of [`OperatorPoly`].
//!
//! Kets `|n₊,n₋⟩` are acted on exactly; truncated matrices use the row-major
//! basis index `n₊·(N+1) + n₋` and drop every image component that leaves the
//! truncation `n₊, n₋ ≤ N`.

use std::collections::btree_map::{BTreeMap, Entry};
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::params::{FieldSign, ParameterSet};
use crate::radical::{squarefree_split, GaussianRational, RadicalScalar, Rational, MAX_RADICAND};
use crate::weyl::{NormalMonomial, OperatorPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FockKet {
    pub n_plus: u32,
    pub n_minus: u32,
}

impl FockKet {
    pub fn new(n_plus: u32, n_minus: u32) -> Self {
        FockKet { n_plus, n_minus }
    }

    /// Eigenvalue of `N₊ − N₋`, the angular quantum number.
    pub fn m_z(&self) -> i64 {
        i64::from(self.n_plus) - i64::from(self.n_minus)
    }

    pub fn fits(&self, truncation: u32) -> bool {
        self.n_plus <= truncation && self.n_minus <= truncation
    }
}

impl fmt::Display for FockKet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{},{}>", self.n_plus, self.n_minus)
    }
}

/// Exact finite superposition of Fock kets.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KetVector {
    amplitudes: BTreeMap<FockKet, RadicalScalar>,
}

impl KetVector {
    pub fn zero() -> Self {
        KetVector::default()
    }

    pub fn basis(k: FockKet) -> Self {
        let mut v = Self::zero();
        v.add_term(k, &RadicalScalar::one());
        v
    }

    pub fn add_term(&mut self, k: FockKet, c: &RadicalScalar) {
        if c.is_zero() {
            return;
        }
        match self.amplitudes.entry(k) {
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

    pub fn amplitude(&self, k: &FockKet) -> RadicalScalar {
        self.amplitudes.get(k).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&FockKet, &RadicalScalar)> {
        self.amplitudes.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.amplitudes.is_empty()
    }

    pub fn len(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amplitudes.is_empty()
    }

    pub fn scale(&self, c: &RadicalScalar) -> Self {
        let mut out = Self::zero();
        for (k, a) in &self.amplitudes {
            out.add_term(*k, &(a * c));
        }
        out
    }

    /// Components with `n₊, n₋ ≤ truncation`.
    pub fn truncated(&self, truncation: u32) -> Self {
        KetVector {
            amplitudes: self
                .amplitudes
                .iter()
                .filter(|(k, _)| k.fits(truncation))
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    /// The scalar `c` with `self = c·|k⟩`, if the vector is proportional to `|k⟩`.
    pub fn proportional_to(&self, k: &FockKet) -> Option<RadicalScalar> {
        match self.amplitudes.len() {
            0 => Some(RadicalScalar::zero()),
            1 => self.amplitudes.get(k).cloned(),
            _ => None,
        }
    }
}

impl fmt::Display for KetVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.amplitudes.is_empty() {
            return f.write_str("0");
        }
        for (idx, (k, c)) in self.amplitudes.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            if c.is_compound() {
                write!(f, "({c}) {k}")?;
            } else {
                write!(f, "{c} {k}")?;
            }
        }
        Ok(())
    }
}

/// Accumulates `√(k₁ k₂ …)` exactly as `outside·√radicand`.
struct SqrtProduct {
    outside: BigInt,
    radicand: u64,
}

impl SqrtProduct {
    fn new() -> Self {
        SqrtProduct {
            outside: BigInt::one(),
            radicand: 1,
        }
    }

    fn push(&mut self, k: u64) {
        let (s, f) = squarefree_split(k.into());
        let f = f as u64;
        let g = self.radicand.gcd(&f);
        self.outside *= BigInt::from(s) * BigInt::from(g);
        let merged = u128::from(self.radicand / g) * u128::from(f / g);
        assert!(merged <= u128::from(MAX_RADICAND), "Fock amplitude radicand overflow");
        self.radicand = merged as u64;
    }

    fn finish(self) -> RadicalScalar {
        RadicalScalar::from_gaussian(
            self.radicand,
            GaussianRational::new(Rational::from_integer(self.outside), Rational::from_integer(0.into())),
        )
    }
}

/// `(a†)^create a^annihilate |n⟩`: new occupation and the factors under the square root.
fn mode_action(n: u32, create: u32, annihilate: u32, acc: &mut SqrtProduct) -> Option<u32> {
    if annihilate > n {
        return None;
    }
    for j in 0..annihilate {
        acc.push(u64::from(n - j));
    }
    let low = n - annihilate;
    for j in 1..=create {
        acc.push(u64::from(low + j));
    }
    Some(low + create)
}

/// Image of one basis ket under one normal-ordered word.
pub fn apply_monomial(m: &NormalMonomial, k: FockKet) -> Option<(FockKet, RadicalScalar)> {
    let mut acc = SqrtProduct::new();
    let n_minus = mode_action(k.n_minus, m.r, m.s, &mut acc)?;
    let n_plus = mode_action(k.n_plus, m.p, m.q, &mut acc)?;
    Some((FockKet::new(n_plus, n_minus), acc.finish()))
}

/// Exact action of an operator on a ket vector.
pub fn apply(a: &OperatorPoly, v: &KetVector) -> KetVector {
    let mut out = KetVector::zero();
    for (k, amp) in v.iter() {
        for (m, c) in a.terms() {
            if let Some((target, factor)) = apply_monomial(m, *k) {
                out.add_term(target, &(&(c * amp) * &factor));
            }
        }
    }
    out
}

/// Angular quantum numbers attached to a Fock ket.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuantumNumbers {
    pub l: u32,
    pub m_z: i64,
    pub sgn_b: FieldSign,
}

impl QuantumNumbers {
    /// Validates `m_z ≥ −l` for `B < 0` and `m_z ≤ l` for `B > 0`.
    pub fn new(l: u32, m_z: i64, sgn_b: FieldSign) -> Option<Self> {
        let l64 = i64::from(l);
        let ok = match sgn_b {
            FieldSign::Negative => m_z >= -l64,
            FieldSign::Positive => m_z <= l64,
        };
        ok.then_some(QuantumNumbers { l, m_z, sgn_b })
    }

    /// Inverse of [`qn_map`]: `n₊ = l + m_z` (B < 0), `n₋ = l − m_z` (B > 0).
    pub fn to_ket(&self) -> FockKet {
        let l = i64::from(self.l);
        match self.sgn_b {
            FieldSign::Negative => FockKet::new((l + self.m_z) as u32, self.l),
            FieldSign::Positive => FockKet::new(self.l, (l - self.m_z) as u32),
        }
    }
}

pub fn qn_map(k: FockKet, params: &ParameterSet) -> QuantumNumbers {
    let sgn_b = params.sgn_b();
    let l = match sgn_b {
        FieldSign::Negative => k.n_minus,
        FieldSign::Positive => k.n_plus,
    };
    QuantumNumbers {
        l,
        m_z: k.m_z(),
        sgn_b,
    }
}

pub fn basis_dimension(truncation: u32) -> usize {
    let side = truncation as usize + 1;
    side * side
}

pub fn basis_index(k: FockKet, truncation: u32) -> usize {
    k.n_plus as usize * (truncation as usize + 1) + k.n_minus as usize
}

pub fn basis_ket(index: usize, truncation: u32) -> FockKet {
    let side = truncation as usize + 1;
    FockKet::new((index / side) as u32, (index % side) as u32)
}

/// Basis kets `n₊, n₋ ≤ truncation` in index order.
pub fn basis(truncation: u32) -> impl Iterator<Item = FockKet> {
    (0..=truncation).flat_map(move |p| (0..=truncation).map(move |m| FockKet::new(p, m)))
}

/// Square sparse matrix keyed by `(row, col)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<T> {
    dimension: usize,
    entries: BTreeMap<(usize, usize), T>,
}

impl<T> SparseMatrix<T> {
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn get(&self, row: usize, col: usize) -> Option<&T> {
        self.entries.get(&(row, col))
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.len()
    }

    /// First stored off-diagonal position, if any.
    pub fn first_off_diagonal(&self) -> Option<(usize, usize)> {
        self.entries.keys().find(|(r, c)| r != c).copied()
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> SparseMatrix<U> {
        SparseMatrix {
            dimension: self.dimension,
            entries: self.entries.iter().map(|(&k, v)| (k, f(v))).collect(),
        }
    }

    /// Transpose with each entry passed through `f` (conjugation gives the adjoint).
    pub fn transpose_map(&self, f: impl Fn(&T) -> T) -> SparseMatrix<T> {
        SparseMatrix {
            dimension: self.dimension,
            entries: self.entries.iter().map(|(&(r, c), v)| ((c, r), f(v))).collect(),
        }
    }
}

impl<T: Clone + Default> SparseMatrix<T> {
    pub fn to_dense(&self) -> Vec<Vec<T>> {
        let mut dense = vec![vec![T::default(); self.dimension]; self.dimension];
        for (&(r, c), v) in &self.entries {
            dense[r][c] = v.clone();
        }
        dense
    }
}

/// Exact truncated matrix `⟨row| a |col⟩`.
pub fn matrix_exact(a: &OperatorPoly, truncation: u32) -> Result<SparseMatrix<RadicalScalar>> {
    let degree = a.max_creation_degree().max(1);
    if truncation < degree {
        return Err(Error::TruncationTooSmall { truncation, degree });
    }
    let mut entries = BTreeMap::new();
    for (col, ket) in basis(truncation).enumerate() {
        let image = apply(a, &KetVector::basis(ket));
        for (target, amp) in image.iter() {
            if target.fits(truncation) {
                entries.insert((basis_index(*target, truncation), col), amp.clone());
            }
        }
    }
    Ok(SparseMatrix {
        dimension: basis_dimension(truncation),
        entries,
    })
}

/// Floating-point truncated matrix, converted from [`matrix_exact`].
pub fn matrix(a: &OperatorPoly, truncation: u32) -> Result<SparseMatrix<Complex64>> {
    Ok(matrix_exact(a, truncation)?.map(RadicalScalar::to_complex))
}
