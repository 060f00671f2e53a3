//! The identity suite: every algebraic relation of the system, checked exactly
//! at sampled parameter sets, plus representation-level checks on Fock kets.
//!
//! Identities are polynomial in the parameters and in `√(ħ|B|)`, so passing at
//! several independent random rational samples certifies them.

use std::time::Instant;

use landau_core::fock::{apply, basis, FockKet, KetVector};
use landau_core::radical::{int, rational};
use landau_core::spectrum::{
    casimir_eigenvalue_with, degeneracy_census_with, ladder_amplitudes_with, ladder_norms, spectrum_with,
};
use landau_core::{Catalog, FieldSign, OperatorName, OperatorPoly, ParameterSet, RadicalScalar, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub identity_id: String,
    pub samples: Vec<ParameterSet>,
    /// Total number of surviving terms (or failed checks) over all samples.
    pub residual_term_count: usize,
    pub pass: bool,
    pub elapsed_ms: u64,
}

/// Draws `k` parameter sets per sign of `B`, positive fields first.
pub fn sample_parameters(k: usize, seed: u64) -> Vec<ParameterSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || rational(rng.gen_range(1..=1000), rng.gen_range(1..=1000));
    let mut out = Vec::with_capacity(2 * k);
    for sign in [1, -1] {
        for _ in 0..k {
            let (hbar, mass, e, b) = (draw(), draw(), draw(), draw());
            out.push(ParameterSet::new(hbar, mass, e, b * int(sign)).expect("sampled values are positive"));
        }
    }
    out
}

/// Algebraic identities return residual operators that must all vanish.
type IdentityFn = fn(&Ctx) -> Result<Vec<OperatorPoly>>;
/// Representation checks return the number of failed comparisons.
type RepresentationFn = fn(&dyn Catalog, &ParameterSet) -> Result<usize>;

pub const ALGEBRA_IDS: [(&str, IdentityFn); 18] = [
    ("ID-01", id01),
    ("ID-02", id02),
    ("ID-03", id03),
    ("ID-04", id04),
    ("ID-05", id05),
    ("ID-06", id06),
    ("ID-07", id07),
    ("ID-08", id08),
    ("ID-09", id09),
    ("ID-10", id10),
    ("ID-11", id11),
    ("ID-12", id12),
    ("ID-13", id13),
    ("ID-14", id14),
    ("ID-15", id15),
    ("ID-16", id16),
    ("ID-17", id17),
    ("ID-18", id18),
];

pub const REPRESENTATION_IDS: [(&str, RepresentationFn); 5] = [
    ("REP-SPECTRUM", rep_spectrum),
    ("REP-CASIMIR", rep_casimir),
    ("REP-LADDER", rep_ladder),
    ("REP-CENSUS", rep_census),
    ("REP-DEGENERACY", rep_degeneracy),
];

pub fn identity_ids() -> impl Iterator<Item = &'static str> {
    ALGEBRA_IDS
        .iter()
        .map(|(id, _)| *id)
        .chain(REPRESENTATION_IDS.iter().map(|(id, _)| *id))
}

/// Runs the whole suite (or the single identity `only`) at the given samples.
/// Engine errors count as failures; they are reported rather than returned.
pub fn run_suite_on(
    catalog: &dyn Catalog,
    samples: &[ParameterSet],
    only: Option<&str>,
    timing: bool,
) -> Vec<VerificationReport> {
    let wanted = |id: &str| only.is_none_or(|o| o == id);
    let mut reports = Vec::new();
    let mut record = |id: &str, check: &dyn Fn(&ParameterSet) -> usize| {
        let start = Instant::now();
        let residual: usize = samples.iter().map(check).sum();
        reports.push(VerificationReport {
            identity_id: id.to_string(),
            samples: samples.to_vec(),
            residual_term_count: residual,
            pass: residual == 0,
            elapsed_ms: if timing { start.elapsed().as_millis() as u64 } else { 0 },
        });
    };
    for (id, f) in ALGEBRA_IDS.iter().filter(|(id, _)| wanted(id)) {
        record(id, &|p| {
            let ctx = Ctx { catalog, p };
            match f(&ctx) {
                Ok(residuals) => residuals.iter().map(OperatorPoly::len).sum(),
                Err(_) => 1,
            }
        });
    }
    for (id, f) in REPRESENTATION_IDS.iter().filter(|(id, _)| wanted(id)) {
        record(id, &|p| f(catalog, p).unwrap_or(1));
    }
    reports
}

pub fn run_identity_suite_with(
    catalog: &dyn Catalog,
    k: usize,
    seed: u64,
    only: Option<&str>,
    timing: bool,
) -> Vec<VerificationReport> {
    run_suite_on(catalog, &sample_parameters(k, seed), only, timing)
}

/// The full suite against the standard catalog at `k` samples per field sign.
pub fn run_identity_suite(k: usize, seed: u64) -> Vec<VerificationReport> {
    run_identity_suite_with(&landau_core::StandardCatalog, k, seed, None, false)
}

pub struct Ctx<'a> {
    catalog: &'a dyn Catalog,
    p: &'a ParameterSet,
}

impl Ctx<'_> {
    fn get(&self, name: OperatorName) -> Result<OperatorPoly> {
        Ok(self.catalog.operator(name, self.p)?)
    }

    fn comm(&self, a: &OperatorPoly, b: &OperatorPoly) -> Result<OperatorPoly> {
        Ok(a.commutator(b)?)
    }

    fn mul(&self, a: &OperatorPoly, b: &OperatorPoly) -> Result<OperatorPoly> {
        Ok(a.try_mul(b)?)
    }

    fn q(&self, r: Rational) -> RadicalScalar {
        RadicalScalar::from_rational(r)
    }

    fn sqrt(&self, r: Rational) -> Result<RadicalScalar> {
        Ok(RadicalScalar::sqrt_rational(&r)?)
    }

    fn hbar(&self) -> Rational {
        self.p.hbar().clone()
    }

    fn b(&self) -> Rational {
        self.p.b_field().clone()
    }

    fn sgn(&self) -> Rational {
        int(self.p.sgn_b().as_i64())
    }
}

fn i() -> RadicalScalar {
    RadicalScalar::i()
}

fn unit() -> OperatorPoly {
    OperatorPoly::identity()
}

fn number_plus() -> OperatorPoly {
    OperatorPoly::apd() * OperatorPoly::ap()
}

fn number_minus() -> OperatorPoly {
    OperatorPoly::amd() * OperatorPoly::am()
}

fn id01(c: &Ctx) -> Result<Vec<OperatorPoly>> {
    use OperatorName::*;
    Ok(vec![
        c.comm(&c.get(Ax)?, &c.get(Axd)?)? - unit(),
        c.comm(&c.get(Ay)?, &c.get(Ayd)?)? - unit(),
        c.comm(&c.get(Ax)?, &c.get(Ay)?)?,
        c.comm(&c.get(Ax)?, &c.get(Ayd)?)?,
    ])
}

fn id02(c: &Ctx) -> Result<Vec<OperatorPoly>> {
    use OperatorName::*;
    let (ap, apd, am, amd) = (c.get(Ap)?, c.get(Apd)?, c.get(Am)?, c.get(Amd)?);
    Ok(vec![
        c.comm(&ap, &apd)? - unit(),
        c.comm(&am, &amd)? - unit(),
        c.comm(&ap, &amd)?,
        c.comm(&am, &apd)?,
        c.comm(&am, &ap)?,
    ])
}

fn id03(c: &Ctx) -> Result<Vec<OperatorPoly>> {
    use OperatorName::*;
    let (x1, x2, x3) = (c.get(X1)?, c.get(X2)?, c.get(X3)?);
    let ih = i() * c.q(c.hbar());
    Ok(vec![
        c.comm(&x1, &x2)?,
        c.comm(&x3, &x1)? - x2.scale(&ih),
        c.comm(&x3, &x2)? + x1.scale(&ih),
    ])
}

fn id04(c: &Ctx) -> Result<Vec<OperatorPoly>> {
    use OperatorName::*;
    let (j1, j2, j3) = (c.get(J1)?, c.get(J2)?, c.get(J3)?);
    let ih = i() * c.q(c.hbar());
    Ok(vec![
        c.comm(&j1, &j2)? - unit().scale(&(&ih * &c.q(c.b()))),
        c.comm(&j3, &j1)? - j2.scale(&ih),
        c.comm(&j3, &j2)? + j1.scale(&ih),
    ])
}

fn id05(c: &Ctx) -> Result<Vec<OperatorPoly>> {
    use OperatorName::*;
    let (jp, jm, j3) = (c.get(Jp)?, c.get(Jm)?, c.get(J3)?);
    let hbar = c.hbar();
    Ok(vec![
        c.comm(&jp, &jm)? - unit().scale_rational(&(&hbar * c.b())),
        c.comm(&j3, &jp)? - jp.scale_rational(&hbar),
        c.comm(&j3, &jm)? + jm.scale_rational(&hbar),
    ])
}

fn id06(c: &Ctx) -> Result<Vec<OperatorPoly>> {
    use OperatorName::*;
    let (xo, yo, h) = (c.get(Xo)?, c.get(Yo)?, c.get(H23)?);
    let central = i() * c.q(c.sgn() * c.hbar() / (c.p.charge_mag() * c.p.abs_b()));
    Ok(vec![
        c.comm(&xo, &h)?,
        c.comm(&yo, &h)?,
        c.comm(&xo, &yo)? - unit().scale(&central),
    ])
}

fn id07(c: &Ctx) -> Result<Vec<OperatorPoly>> {
    use OperatorName::*;
    let h = c.get(H23)?;
    [J1, J2, J3].into_iter().map(|j| c.comm(&c.get(j)?, &h)).collect()
}

fn id08(c: &Ctx) -> Result<Vec<OperatorPoly>> {
    use OperatorName::*;
    let lz = c.mul(&c.get(X)?, &c.get(Py)?)? - c.mul(&c.get(Y)?, &c.get(Px)?)?;
    let expected = (number_plus() - number_minus()).scale_rational(&c.hbar());
    Ok(vec![&lz - &expected, c.get(Lz)? - lz])
}

fn id09(c: &Ctx) -> Result<Vec<OperatorPoly>> {
    use OperatorName::*;
    let k = c.sqrt(c.hbar() * c.p.abs_b())?;
    let (jp, jm) = match c.p.sgn_b() {
        FieldSign::Positive => (OperatorPoly::am().scale(&(i() * &k)), OperatorPoly::amd().scale(&(-i() * &k))),
        FieldSign::Negative => (OperatorPoly::apd().scale(&(-i() * &k)), OperatorPoly::ap().scale(&(i() * &k))),
    };
    let (j1, j2) = (c.get(J1)?, c.get(J2)?);
    let inv_sqrt2 = c.sqrt(rational(1, 2))?;
    let ij2 = j2.scale(&i());
    Ok(vec![
        (&j1 + &ij2).scale(&inv_sqrt2) - &jp,
        (&j1 - &ij2).scale(&inv_sqrt2) - &jm,
        c.get(Jp)? - jp,
        c.get(Jm)? - jm,
    ])
}

fn id10(c: &Ctx) -> Result<Vec<OperatorPoly>> {
    use OperatorName::*;
    let n = match c.p.sgn_b() {
        FieldSign::Positive => number_plus(),
        FieldSign::Negative => number_minus(),
    };
    let closed = (n.scale_rational(&int(2)) + unit()).scale_rational(&(c.hbar() * c.p.abs_b()));
    let (j1, j2, j3) = (c.get(J1)?, c.get(J2)?, c.get(J3)?);
    let defining = c.mul(&j1, &j1)? + c.mul(&j2, &j2)? + j3.scale_rational(&(int(2) * c.b()));
    let cbar = c.get(Cbar)?;
    Ok(vec![&cbar - &closed, cbar - defining])
}

fn id11(c: &Ctx) -> Result<Vec<OperatorPoly>> {
    use OperatorName::*;
    let ratio = int(2) * c.p.mass() / c.p.charge_mag();
    Ok(vec![c.get(Cbar)? - c.get(H23)?.scale_rational(&ratio)])
}

fn id12(c: &Ctx) -> Result<Vec<OperatorPoly>> {
    use OperatorName::*;
    let (jp, jm, mz, cbar) = (c.get(Jp)?, c.get(Jm)?, c.get(Mz)?, c.get(Cbar)?);
    let two = int(2);
    let shift = unit().scale_rational(&(c.b() * c.hbar()));
    let mz_term = mz.scale_rational(&(&two * c.b()));
    Ok(vec![
        &cbar - &(c.mul(&jp, &jm)?.scale_rational(&two) + &mz_term - &shift),
        cbar - (c.mul(&jm, &jp)?.scale_rational(&two) + mz_term + shift),
    ])
}

fn id13(c: &Ctx) -> Result<Vec<OperatorPoly>> {
    use OperatorName::*;
    let diff = c.get(Np)? - c.get(Nm)?;
    let (jp, jm) = (c.get(Jp)?, c.get(Jm)?);
    Ok(vec![c.comm(&diff, &jm)? + jm, c.comm(&diff, &jp)? - jp])
}

fn id14(c: &Ctx) -> Result<Vec<OperatorPoly>> {
    use OperatorName::*;
    let (np, nm) = (c.get(Np)?, c.get(Nm)?);
    let (ap, apd, am, amd) = (c.get(Ap)?, c.get(Apd)?, c.get(Am)?, c.get(Amd)?);
    Ok(vec![
        c.comm(&np, &ap)? + &ap,
        c.comm(&nm, &am)? + &am,
        c.comm(&np, &apd)? - &apd,
        c.comm(&nm, &amd)? - &amd,
        c.comm(&np, &nm)?,
    ])
}

fn id15(c: &Ctx) -> Result<Vec<OperatorPoly>> {
    use OperatorName::*;
    let hw = c.p.hbar_omega();
    let zeeman = c.p.charge_mag() * c.b() / (int(2) * c.p.mass()) * c.hbar();
    let h2_pm = (number_plus() + number_minus() + unit()).scale_rational(&hw);
    let h3_pm = (number_plus() - number_minus()).scale_rational(&zeeman);
    let (ax, axd, ay, ayd) = (c.get(Ax)?, c.get(Axd)?, c.get(Ay)?, c.get(Ayd)?);
    let h2_xy = (c.mul(&axd, &ax)? + c.mul(&ayd, &ay)? + unit()).scale_rational(&hw);
    let h3_xy = (c.mul(&ax, &ayd)? - c.mul(&ay, &axd)?).scale(&(i() * c.q(zeeman)));
    let (h2, h3) = (c.get(H2)?, c.get(H3)?);
    Ok(vec![&h2 - &h2_pm, &h3 - &h3_pm, h2 - h2_xy, h3 - h3_xy])
}

fn id16(c: &Ctx) -> Result<Vec<OperatorPoly>> {
    use OperatorName::*;
    let cbar = c.get(Cbar)?;
    let ce2 = c.get(CE2)?;
    let mut out = Vec::new();
    for j in [J1, J2, J3] {
        out.push(c.comm(&cbar, &c.get(j)?)?);
    }
    for x in [X1, X2, X3] {
        out.push(c.comm(&ce2, &c.get(x)?)?);
    }
    Ok(out)
}

fn id17(c: &Ctx) -> Result<Vec<OperatorPoly>> {
    use OperatorName::*;
    let m_omega = c.p.mass() * c.p.omega();
    let k = c.sgn() / m_omega;
    let half = rational(1, 2);
    let xo = (c.get(X)? - c.get(Py)?.scale_rational(&k)).scale_rational(&half);
    let yo = (c.get(Y)? + c.get(Px)?.scale_rational(&k)).scale_rational(&half);
    Ok(vec![c.get(Xo)? - xo, c.get(Yo)? - yo])
}

fn id18(c: &Ctx) -> Result<Vec<OperatorPoly>> {
    use OperatorName::*;
    let mut out = Vec::new();
    for j in [J1, J2, J3] {
        let op = c.get(j)?;
        out.push(op.adjoint() - op);
    }
    out.push(c.get(Jp)?.adjoint() - c.get(Jm)?);
    Ok(out)
}

/// Small truncation for the representation checks; the acceptance tests go larger.
const REP_TRUNCATION: u32 = 8;

fn count(failures: impl IntoIterator<Item = bool>) -> usize {
    failures.into_iter().filter(|&failed| failed).count()
}

fn rep_spectrum(catalog: &dyn Catalog, p: &ParameterSet) -> Result<usize> {
    let report = spectrum_with(catalog, p, REP_TRUNCATION)?;
    let mut failures = usize::from(report.levels.len() != REP_TRUNCATION as usize + 1);
    failures += count(report.levels.iter().enumerate().map(|(l, level)| {
        level.l != l as u32
            || level.energy_exact != p.landau_level(l as u32)
            || level.multiplicity != REP_TRUNCATION as usize + 1
    }));
    Ok(failures)
}

fn closed_casimir(k: FockKet, p: &ParameterSet) -> Rational {
    let b_hbar = p.b_field() * p.hbar();
    match p.sgn_b() {
        FieldSign::Positive => b_hbar * int(2 * i64::from(k.n_plus) + 1),
        FieldSign::Negative => -b_hbar * int(2 * i64::from(k.n_minus) + 1),
    }
}

fn rep_casimir(catalog: &dyn Catalog, p: &ParameterSet) -> Result<usize> {
    let h23 = catalog.operator(OperatorName::H23, p)?;
    let ratio = RadicalScalar::from_rational(int(2) * p.mass() / p.charge_mag());
    let mut failures = 0;
    for k in basis(REP_TRUNCATION) {
        let value = casimir_eigenvalue_with(catalog, k, p)?;
        let energy = apply(&h23, &KetVector::basis(k)).proportional_to(&k);
        failures += count([
            value != RadicalScalar::from_rational(closed_casimir(k, p)),
            energy.map(|e| e * &ratio) != Some(value),
        ]);
    }
    Ok(failures)
}

fn rep_ladder(catalog: &dyn Catalog, p: &ParameterSet) -> Result<usize> {
    let mut failures = 0;
    for k in basis(REP_TRUNCATION) {
        match ladder_amplitudes_with(catalog, k, p) {
            Ok(amps) => {
                let (gamma_sq, delta_sq) = ladder_norms(k, p);
                failures += count([
                    amps.gamma.norm_sqr() != RadicalScalar::from_rational(gamma_sq),
                    amps.delta.norm_sqr() != RadicalScalar::from_rational(delta_sq),
                ]);
            }
            Err(_) => failures += 1,
        }
    }
    Ok(failures)
}

const CENSUS_LEVELS: [u32; 2] = [0, 2];
const CENSUS_TRUNCATIONS: [u32; 3] = [2, 4, 8];

fn rep_census(catalog: &dyn Catalog, p: &ParameterSet) -> Result<usize> {
    let mut failures = 0;
    for level in CENSUS_LEVELS {
        let report = degeneracy_census_with(catalog, p, level, &CENSUS_TRUNCATIONS)?;
        failures += count(
            report
                .counts
                .iter()
                .zip(&CENSUS_TRUNCATIONS)
                .map(|(&c, &n)| c != n as usize + 1),
        );
        failures += count(report.counts.windows(2).map(|w| w[0] >= w[1]));
    }
    Ok(failures)
}

fn rep_degeneracy(catalog: &dyn Catalog, p: &ParameterSet) -> Result<usize> {
    let mut failures = 0;
    for level in CENSUS_LEVELS {
        let report = degeneracy_census_with(catalog, p, level, &CENSUS_TRUNCATIONS)?;
        failures += usize::from(!report.shifted_eigenvector_ok);
    }
    Ok(failures)
}
