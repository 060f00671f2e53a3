mod common;

use common::arb_scalar;
use landau_core::radical::{rational, RadicalScalar};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

proptest! {
    #[test]
    fn addition_is_associative_and_commutative(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn multiplication_is_associative_commutative_distributive(
        a in arb_scalar(), b in arb_scalar(), c in arb_scalar()
    ) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &RadicalScalar::one(), a.clone());
    }

    #[test]
    fn conjugation_is_an_involutive_homomorphism(a in arb_scalar(), b in arb_scalar()) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
        let radicands: Vec<u64> = a.terms().map(|(r, _)| r).collect();
        let conj_radicands: Vec<u64> = a.conj().terms().map(|(r, _)| r).collect();
        prop_assert_eq!(radicands, conj_radicands);
        let n = a.norm_sqr();
        prop_assert!(n.is_real());
        prop_assert!(n.to_complex().re >= -1e-9);
    }

    #[test]
    fn float_evaluation_respects_products(a in arb_scalar(), b in arb_scalar()) {
        let exact = (&a * &b).to_complex();
        let float = a.to_complex() * b.to_complex();
        let scale = exact.norm().max(float.norm()).max(1e-300);
        prop_assert!((exact - float).norm() <= 1e-12 * scale.max(1.0));
    }
}

#[test]
fn sqrt_of_random_rationals_squares_back() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..1000 {
        let q = rational(rng.gen_range(1..=10_000), rng.gen_range(1..=10_000));
        let root = RadicalScalar::sqrt_rational(&q).unwrap();
        assert_eq!(&root * &root, RadicalScalar::from_rational(q.clone()), "sqrt({q})");
        assert_eq!(root.term_count(), 1);
    }
}
