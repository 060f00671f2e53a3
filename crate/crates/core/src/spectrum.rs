//! Landau levels, Casimir eigenvalues, ladder amplitudes and the degeneracy census.
//!
//! Everything here is computed by acting with catalog operators on Fock kets;
//! closed-form expectations are only used to check the computed values.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::catalog::{Catalog, OperatorName, StandardCatalog};
use crate::error::{Error, Result};
use crate::fock::{apply, basis, basis_ket, matrix_exact, qn_map, FockKet, KetVector};
use crate::params::{FieldSign, ParameterSet};
use crate::radical::{RadicalScalar, Rational};

/// Eigenvalue of the Casimir operator on `|k⟩`.
pub fn casimir_eigenvalue(k: FockKet, params: &ParameterSet) -> Result<RadicalScalar> {
    casimir_eigenvalue_with(&StandardCatalog, k, params)
}

pub fn casimir_eigenvalue_with(
    catalog: &dyn Catalog,
    k: FockKet,
    params: &ParameterSet,
) -> Result<RadicalScalar> {
    let cbar = catalog.operator(OperatorName::Cbar, params)?;
    apply(&cbar, &KetVector::basis(k))
        .proportional_to(&k)
        .ok_or(Error::NotEigenstate(k))
}

/// Amplitudes of `J₋|k⟩ = γ|k'⟩` and `J₊|k⟩ = δ|k''⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LadderAmplitudes {
    pub gamma: RadicalScalar,
    pub delta: RadicalScalar,
    /// Target of `J₋`, absent when the ket is annihilated.
    pub lowered: Option<FockKet>,
    pub raised: Option<FockKet>,
}

/// Closed-form `|γ|²` and `|δ|²` for the given ket.
pub fn ladder_norms(k: FockKet, params: &ParameterSet) -> (Rational, Rational) {
    let scale = params.b_field() * params.hbar();
    let n = |v: u32| Rational::from_integer(BigInt::from(v));
    match params.sgn_b() {
        FieldSign::Negative => (-&scale * n(k.n_plus), -&scale * n(k.n_plus + 1)),
        FieldSign::Positive => (&scale * n(k.n_minus + 1), &scale * n(k.n_minus)),
    }
}

fn single_image(image: &KetVector, k: FockKet, shift: i64, params: &ParameterSet) -> Result<(RadicalScalar, Option<FockKet>)> {
    match image.len() {
        0 => Ok((RadicalScalar::zero(), None)),
        1 => {
            let (target, amp) = image.iter().next().map(|(t, a)| (*t, a.clone())).unwrap();
            let same_level = qn_map(target, params).l == qn_map(k, params).l;
            if target.m_z() != k.m_z() + shift || !same_level {
                return Err(Error::FormulaMismatch {
                    ket: k,
                    detail: format!("ladder image landed on {target}"),
                });
            }
            Ok((amp, Some(target)))
        }
        _ => Err(Error::FormulaMismatch {
            ket: k,
            detail: format!("ladder image {image} is not a single ket"),
        }),
    }
}

pub fn ladder_amplitudes(k: FockKet, params: &ParameterSet) -> Result<LadderAmplitudes> {
    ladder_amplitudes_with(&StandardCatalog, k, params)
}

/// Extracts `γ`, `δ` by applying `J∓` and checks `|γ|²`, `|δ|²` against [`ladder_norms`].
pub fn ladder_amplitudes_with(
    catalog: &dyn Catalog,
    k: FockKet,
    params: &ParameterSet,
) -> Result<LadderAmplitudes> {
    let ket = KetVector::basis(k);
    let jm = catalog.operator(OperatorName::Jm, params)?;
    let jp = catalog.operator(OperatorName::Jp, params)?;
    let (gamma, lowered) = single_image(&apply(&jm, &ket), k, -1, params)?;
    let (delta, raised) = single_image(&apply(&jp, &ket), k, 1, params)?;

    let (gamma_sq, delta_sq) = ladder_norms(k, params);
    for (label, amp, expected) in [("|gamma|^2", &gamma, gamma_sq), ("|delta|^2", &delta, delta_sq)] {
        let got = amp.norm_sqr();
        if got != RadicalScalar::from_rational(expected.clone()) {
            return Err(Error::FormulaMismatch {
                ket: k,
                detail: format!("{label} = {got}, expected {expected}"),
            });
        }
    }
    Ok(LadderAmplitudes {
        gamma,
        delta,
        lowered,
        raised,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumLevel {
    pub energy: f64,
    pub energy_exact: Rational,
    pub l: u32,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumReport {
    pub truncation: u32,
    pub levels: Vec<SpectrumLevel>,
    pub params: ParameterSet,
}

pub fn spectrum(params: &ParameterSet, truncation: u32) -> Result<SpectrumReport> {
    spectrum_with(&StandardCatalog, params, truncation)
}

/// Diagonal of the exact truncated `H₂₃` matrix, grouped by energy.
pub fn spectrum_with(
    catalog: &dyn Catalog,
    params: &ParameterSet,
    truncation: u32,
) -> Result<SpectrumReport> {
    let h23 = catalog.operator(OperatorName::H23, params)?;
    let m = matrix_exact(&h23, truncation)?;
    if let Some((row, col)) = m.first_off_diagonal() {
        return Err(Error::NonDiagonal { row, col });
    }
    let mut groups: BTreeMap<Rational, (u32, usize)> = BTreeMap::new();
    for index in 0..m.dimension() {
        let ket = basis_ket(index, truncation);
        let energy = match m.get(index, index) {
            Some(v) => v.as_rational().ok_or(Error::NotEigenstate(ket))?,
            None => Rational::from_integer(0.into()),
        };
        let l = qn_map(ket, params).l;
        groups.entry(energy).or_insert((l, 0)).1 += 1;
    }
    let levels = groups
        .into_iter()
        .map(|(energy_exact, (l, multiplicity))| SpectrumLevel {
            energy: energy_exact.to_f64().unwrap_or(f64::NAN),
            energy_exact,
            l,
            multiplicity,
        })
        .collect();
    Ok(SpectrumReport {
        truncation,
        levels,
        params: params.clone(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    pub level: u32,
    pub truncations: Vec<u32>,
    pub counts: Vec<usize>,
    /// `x₀|φ⟩` and `y₀|φ⟩` remain eigenvectors at the same energy without
    /// being proportional to `|φ⟩`, at every truncation `N ≥ 1`.
    pub shifted_eigenvector_ok: bool,
}

pub fn degeneracy_census(params: &ParameterSet, level: u32, truncations: &[u32]) -> Result<CensusReport> {
    degeneracy_census_with(&StandardCatalog, params, level, truncations)
}

fn is_eigenvector(h: &crate::weyl::OperatorPoly, v: &KetVector, energy: &RadicalScalar) -> bool {
    !v.is_zero() && apply(h, v) == v.scale(energy)
}

pub fn degeneracy_census_with(
    catalog: &dyn Catalog,
    params: &ParameterSet,
    level: u32,
    truncations: &[u32],
) -> Result<CensusReport> {
    let h23 = catalog.operator(OperatorName::H23, params)?;
    let energy = RadicalScalar::from_rational(params.landau_level(level));
    let shifts = [
        catalog.operator(OperatorName::Xo, params)?,
        catalog.operator(OperatorName::Yo, params)?,
    ];
    // the state of level `level` with the degenerate mode empty
    let phi = match params.sgn_b() {
        FieldSign::Positive => FockKet::new(level, 0),
        FieldSign::Negative => FockKet::new(0, level),
    };

    let mut counts = Vec::with_capacity(truncations.len());
    let mut shifted_ok = true;
    for &n in truncations {
        if n < level {
            return Err(Error::LevelOutsideTruncation { level, truncation: n });
        }
        let count = basis(n)
            .filter(|&k| is_eigenvector(&h23, &KetVector::basis(k), &energy))
            .count();
        counts.push(count);

        if n >= 1 {
            let v = KetVector::basis(phi);
            shifted_ok &= is_eigenvector(&h23, &v, &energy);
            for g in &shifts {
                let w = apply(g, &v).truncated(n);
                shifted_ok &= is_eigenvector(&h23, &w, &energy) && w.proportional_to(&phi).is_none();
            }
        }
    }
    Ok(CensusReport {
        level,
        truncations: truncations.to_vec(),
        counts,
        shifted_eigenvector_ok: shifted_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radical::int;

    fn unit(b: i64) -> ParameterSet {
        ParameterSet::unit(int(b)).unwrap()
    }

    #[test]
    fn casimir_examples() {
        let k = FockKet::new(2, 5);
        assert_eq!(casimir_eigenvalue(k, &unit(2)).unwrap(), RadicalScalar::from_integer(10));
        assert_eq!(casimir_eigenvalue(k, &unit(-2)).unwrap(), RadicalScalar::from_integer(22));
        assert_eq!(
            casimir_eigenvalue(FockKet::new(0, 0), &unit(2)).unwrap(),
            RadicalScalar::from_integer(2)
        );
    }

    #[test]
    fn ladder_examples() {
        let amps = ladder_amplitudes(FockKet::new(5, 2), &unit(2)).unwrap();
        assert_eq!(amps.gamma.norm_sqr(), RadicalScalar::from_integer(6));
        assert_eq!(amps.delta.norm_sqr(), RadicalScalar::from_integer(4));
        // J₋ = −i√2 a₋†, J₊ = i√2 a₋ at B = 2
        assert_eq!(amps.gamma, -RadicalScalar::i() * RadicalScalar::sqrt_integer(6));
        assert_eq!(amps.delta, RadicalScalar::i() * RadicalScalar::from_integer(2));
        assert_eq!(amps.lowered, Some(FockKet::new(5, 3)));
        assert_eq!(amps.raised, Some(FockKet::new(5, 1)));

        let amps = ladder_amplitudes(FockKet::new(3, 1), &unit(-2)).unwrap();
        assert_eq!(amps.gamma.norm_sqr(), RadicalScalar::from_integer(6));
        assert_eq!(amps.delta.norm_sqr(), RadicalScalar::from_integer(8));

        let amps = ladder_amplitudes(FockKet::new(0, 4), &unit(-2)).unwrap();
        assert!(amps.gamma.is_zero());
        assert_eq!(amps.lowered, None);
    }

    #[test]
    fn small_spectrum() {
        let report = spectrum(&unit(2), 3).unwrap();
        let energies: Vec<f64> = report.levels.iter().map(|l| l.energy).collect();
        assert_eq!(energies, vec![1.0, 3.0, 5.0, 7.0]);
        assert!(report.levels.iter().all(|l| l.multiplicity == 4));
        let ls: Vec<u32> = report.levels.iter().map(|l| l.l).collect();
        assert_eq!(ls, vec![0, 1, 2, 3]);
    }

    #[test]
    fn census_examples() {
        let report = degeneracy_census(&unit(2), 2, &[4, 8, 16]).unwrap();
        assert_eq!(report.counts, vec![5, 9, 17]);
        assert!(report.shifted_eigenvector_ok);
        let report = degeneracy_census(&unit(-2), 0, &[1]).unwrap();
        assert_eq!(report.counts, vec![2]);
        assert!(report.shifted_eigenvector_ok);
        assert!(matches!(
            degeneracy_census(&unit(2), 5, &[8, 4]),
            Err(Error::LevelOutsideTruncation { level: 5, truncation: 4 })
        ));
    }
}
