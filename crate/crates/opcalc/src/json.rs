//! Lossless JSON encoding: rationals as `"p/q"` strings, radical scalars as
//! arrays of `[radicand, "re", "im"]`.

use landau_core::spectrum::{CensusReport, SpectrumReport};
use landau_core::{KetVector, OperatorPoly, ParameterSet, RadicalScalar, Rational};
use serde_json::{json, Value};

use crate::suite::VerificationReport;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub fn rational(q: &Rational) -> Value {
    Value::String(format!("{}/{}", q.numer(), q.denom()))
}

pub fn scalar(c: &RadicalScalar) -> Value {
    Value::Array(
        c.terms()
            .map(|(r, g)| json!([r, rational(&g.re), rational(&g.im)]))
            .collect(),
    )
}

pub fn params(p: &ParameterSet) -> Value {
    json!({
        "hbar": rational(p.hbar()),
        "mass": rational(p.mass()),
        "charge_mag": rational(p.charge_mag()),
        "b_field": rational(p.b_field()),
        "omega": rational(p.omega()),
        "sgn_b": p.sgn_b().as_i64(),
    })
}

pub fn operator(a: &OperatorPoly) -> Value {
    let terms: Vec<Value> = a
        .terms()
        .rev()
        .map(|(m, c)| json!({"monomial": [m.p, m.q, m.r, m.s], "coefficient": scalar(c)}))
        .collect();
    json!({"text": a.to_string(), "terms": terms})
}

pub fn ket_vector(v: &KetVector) -> Value {
    let terms: Vec<Value> = v
        .iter()
        .map(|(k, c)| json!({"ket": [k.n_plus, k.n_minus], "amplitude": scalar(c)}))
        .collect();
    json!({"text": v.to_string(), "terms": terms})
}

pub fn spectrum(s: &SpectrumReport) -> Value {
    let levels: Vec<Value> = s
        .levels
        .iter()
        .map(|l| {
            json!({
                "energy": l.energy,
                "energy_exact": rational(&l.energy_exact),
                "l": l.l,
                "multiplicity": l.multiplicity,
            })
        })
        .collect();
    json!({"truncation": s.truncation, "levels": levels, "params": params(&s.params)})
}

pub fn census(c: &CensusReport) -> Value {
    json!({
        "level": c.level,
        "truncations": c.truncations,
        "counts": c.counts,
        "shifted_eigenvector_ok": c.shifted_eigenvector_ok,
    })
}

pub fn report(r: &VerificationReport) -> Value {
    json!({
        "identity_id": r.identity_id,
        "samples": r.samples.iter().map(params).collect::<Vec<_>>(),
        "residual_term_count": r.residual_term_count,
        "pass": r.pass,
        "elapsed_ms": r.elapsed_ms,
    })
}

pub fn suite(reports: &[VerificationReport], seed: u64) -> Value {
    json!({
        "suite": reports.iter().map(report).collect::<Vec<_>>(),
        "seed": seed,
        "version": VERSION,
    })
}
