mod common;

use std::collections::BTreeMap;

use common::{arb_operator, random_operator};
use landau_core::fock::{basis, basis_index, basis_ket};
use landau_core::radical::{int, rational};
use landau_core::{
    apply, casimir_eigenvalue, catalog, degeneracy_census, ladder_amplitudes, matrix, matrix_exact, qn_map,
    spectrum, FieldSign, FockKet, KetVector, OperatorName, ParameterSet, QuantumNumbers, RadicalScalar,
};
use num_complex::Complex64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn params(b: i64) -> ParameterSet {
    ParameterSet::new(rational(3, 2), rational(5, 4), rational(2, 3), rational(b, 3)).unwrap()
}

fn arb_ket(max: u32) -> impl Strategy<Value = FockKet> {
    (0..=max, 0..=max).prop_map(|(p, m)| FockKet::new(p, m))
}

proptest! {
    #[test]
    fn action_composes(a in arb_operator(3), b in arb_operator(3), k in arb_ket(6)) {
        let v = KetVector::basis(k);
        prop_assert_eq!(apply(&(&a * &b), &v), apply(&a, &apply(&b, &v)));
    }

    #[test]
    fn quantum_numbers_round_trip(k in arb_ket(40), negative in any::<bool>()) {
        let p = params(if negative { -7 } else { 7 });
        let qn = qn_map(k, &p);
        prop_assert_eq!(qn.to_ket(), k);
        prop_assert_eq!(QuantumNumbers::new(qn.l, qn.m_z, qn.sgn_b), Some(qn));
    }
}

#[test]
fn invalid_quantum_numbers_are_rejected() {
    // B > 0 requires m_z ≤ l, B < 0 requires m_z ≥ −l
    assert!(QuantumNumbers::new(1, 2, FieldSign::Positive).is_none());
    assert!(QuantumNumbers::new(1, -2, FieldSign::Negative).is_none());
    assert!(QuantumNumbers::new(1, -5, FieldSign::Positive).is_some());
}

fn column(m: &BTreeMap<(usize, usize), Complex64>, col: usize) -> BTreeMap<usize, Complex64> {
    m.iter().filter(|((_, c), _)| *c == col).map(|((r, _), v)| (*r, *v)).collect()
}

#[test]
fn truncated_matrices_multiply_inside_guard_band() {
    const N: u32 = 12;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..100 {
        let a = random_operator(&mut rng, 3, 3);
        let b = random_operator(&mut rng, 3, 3);
        let guard = a.total_degree() + b.total_degree();
        let to_map = |op| -> BTreeMap<(usize, usize), Complex64> {
            matrix(op, N).unwrap().entries().map(|(r, c, v)| ((r, c), *v)).collect()
        };
        let (ma, mb, mab) = (to_map(&a), to_map(&b), to_map(&(&a * &b)));

        for k in basis(N).filter(|k| k.n_plus + guard <= N && k.n_minus + guard <= N) {
            let j = basis_index(k, N);
            let mut product: BTreeMap<usize, Complex64> = BTreeMap::new();
            for (mid, bv) in column(&mb, j) {
                for (row, av) in column(&ma, mid) {
                    *product.entry(row).or_default() += av * bv;
                }
            }
            let direct = column(&mab, j);
            let rows: std::collections::BTreeSet<usize> = product.keys().chain(direct.keys()).copied().collect();
            let mut diff: f64 = 0.0;
            let mut scale: f64 = 1.0;
            for r in rows {
                let x = product.get(&r).copied().unwrap_or_default();
                let y = direct.get(&r).copied().unwrap_or_default();
                diff = diff.max((x - y).norm());
                scale = scale.max(y.norm());
            }
            assert!(diff / scale <= 1e-10, "column {} of {a} * {b}: {diff}", basis_ket(j, N));
        }
    }
}

#[test]
fn hamiltonian_and_angular_momentum_are_hermitian() {
    for b in [4, -4] {
        let p = params(b);
        for name in [OperatorName::H23, OperatorName::Mz, OperatorName::CE2, OperatorName::X] {
            let m = matrix_exact(&catalog(name, &p).unwrap(), 8).unwrap();
            assert_eq!(m.transpose_map(RadicalScalar::conj), m, "{name} at B={b}/3");
        }
    }
}

#[test]
fn ladder_generators_shift_angular_momentum() {
    for b in [5, -5] {
        let p = params(b);
        let jp = catalog(OperatorName::Jp, &p).unwrap();
        let jm = catalog(OperatorName::Jm, &p).unwrap();
        let mz = catalog(OperatorName::Mz, &p).unwrap();
        let hbar = RadicalScalar::from_rational(p.hbar().clone());
        for k in basis(6) {
            let v = KetVector::basis(k);
            let mz_k = RadicalScalar::from_integer(k.m_z()) * &hbar;
            let up = apply(&jp, &v);
            let down = apply(&jm, &v);
            assert_eq!(apply(&mz, &up), up.scale(&(&mz_k + &hbar)));
            assert_eq!(apply(&mz, &down), down.scale(&(&mz_k - &hbar)));
            let amps = ladder_amplitudes(k, &p).unwrap();
            assert_eq!(amps.raised.is_some(), !up.is_zero());
            assert_eq!(amps.lowered.is_some(), !down.is_zero());
        }
    }
}

#[test]
fn casimir_tracks_hamiltonian() {
    for b in [2, -2] {
        let p = params(b);
        let h23 = catalog(OperatorName::H23, &p).unwrap();
        let ratio = RadicalScalar::from_rational(int(2) * p.mass() / p.charge_mag());
        for k in basis(10) {
            let energy = apply(&h23, &KetVector::basis(k)).proportional_to(&k).unwrap();
            assert_eq!(casimir_eigenvalue(k, &p).unwrap(), energy * &ratio);
        }
    }
}

#[test]
fn spectrum_matches_landau_levels() {
    const N: u32 = 10;
    for b in [2, -2] {
        let p = params(b);
        let report = spectrum(&p, N).unwrap();
        assert_eq!(report.levels.len(), N as usize + 1);
        for (l, level) in report.levels.iter().enumerate() {
            assert_eq!(level.l, l as u32);
            assert_eq!(level.energy_exact, p.landau_level(l as u32));
            assert_eq!(level.multiplicity, N as usize + 1);
        }
    }
}

#[test]
fn census_grows_with_truncation() {
    let truncations = [4, 8, 16];
    for b in [2, -2] {
        for level in [0, 2] {
            let report = degeneracy_census(&params(b), level, &truncations).unwrap();
            assert!(report.counts.windows(2).all(|w| w[0] < w[1]), "{:?}", report.counts);
            let expected: Vec<usize> = truncations.iter().map(|&n| n as usize + 1).collect();
            assert_eq!(report.counts, expected);
            assert!(report.shifted_eigenvector_ok);
        }
    }
}
