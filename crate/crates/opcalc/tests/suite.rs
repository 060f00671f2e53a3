use landau_core::radical::rational;
use landau_core::{Catalog, OperatorName, OperatorPoly, ParameterSet, StandardCatalog};
use opcalc::{run_identity_suite, run_identity_suite_with, run_suite_on, sample_parameters};

/// Standard catalog with the sign of `J2` flipped.
struct FlippedJ2;

impl Catalog for FlippedJ2 {
    fn operator(&self, name: OperatorName, params: &ParameterSet) -> landau_core::Result<OperatorPoly> {
        let op = StandardCatalog.operator(name, params)?;
        Ok(if name == OperatorName::J2 { -op } else { op })
    }
}

#[test]
fn full_suite_passes() {
    let reports = run_identity_suite(5, 42);
    assert_eq!(reports.len(), 23);
    assert_eq!(reports.iter().filter(|r| r.identity_id.starts_with("ID-")).count(), 18);
    for r in &reports {
        assert!(r.pass, "{} residual {}", r.identity_id, r.residual_term_count);
        assert_eq!(r.samples.len(), 10);
        assert_eq!(r.elapsed_ms, 0);
    }
}

#[test]
fn samples_cover_both_signs_deterministically() {
    let a = sample_parameters(5, 7);
    assert_eq!(a, sample_parameters(5, 7));
    assert_ne!(a, sample_parameters(5, 8));
    assert!(a[..5].iter().all(|p| p.b_field() > &rational(0, 1)));
    assert!(a[5..].iter().all(|p| p.b_field() < &rational(0, 1)));
    let bound = rational(1000, 1);
    for p in &a {
        for q in [p.hbar(), p.mass(), p.charge_mag()] {
            assert!(q <= &bound && q >= &bound.recip());
        }
    }
}

#[test]
fn hand_set_parameters_close_the_algebra() {
    let p = ParameterSet::unit(rational(2, 1)).unwrap();
    let reports = run_suite_on(&StandardCatalog, &[p], Some("ID-04"), false);
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0].residual_term_count, 0);
    assert!(reports[0].pass);
}

#[test]
fn corrupted_catalog_is_caught() {
    let reports = run_identity_suite_with(&FlippedJ2, 5, 42, None, false);
    let id04 = reports.iter().find(|r| r.identity_id == "ID-04").unwrap();
    assert!(!id04.pass);
    assert!(id04.residual_term_count > 0);
    // identities that never mention J2 are unaffected
    for id in ["ID-01", "ID-02", "ID-11", "REP-SPECTRUM"] {
        assert!(reports.iter().find(|r| r.identity_id == id).unwrap().pass, "{id}");
    }
}
