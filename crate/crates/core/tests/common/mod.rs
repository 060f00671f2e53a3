#![allow(dead_code)]

pub mod oracle;

use landau_core::radical::rational;
use landau_core::{NormalMonomial, OperatorPoly, RadicalScalar};
use proptest::prelude::*;
use rand::Rng;

pub const RADICANDS: [u64; 6] = [1, 2, 3, 5, 6, 10];

pub fn scalar_term(radicand: u64, re: (i64, i64), im: (i64, i64)) -> RadicalScalar {
    let c = RadicalScalar::from_rational(rational(re.0, re.1))
        + RadicalScalar::i() * RadicalScalar::from_rational(rational(im.0, im.1));
    c * RadicalScalar::sqrt_integer(radicand)
}

prop_compose! {
    fn arb_scalar_term()(
        radicand in prop::sample::select(RADICANDS.to_vec()),
        re in (-30i64..30, 1i64..12),
        im in (-30i64..30, 1i64..12),
    ) -> RadicalScalar {
        scalar_term(radicand, re, im)
    }
}

pub fn arb_scalar() -> impl Strategy<Value = RadicalScalar> {
    prop::collection::vec(arb_scalar_term(), 0..4)
        .prop_map(|ts| ts.into_iter().fold(RadicalScalar::zero(), |acc, t| acc + t))
}

pub fn arb_monomial(max_degree: u32) -> impl Strategy<Value = NormalMonomial> {
    (0..=max_degree, 0..=max_degree, 0..=max_degree, 0..=max_degree)
        .prop_filter("degree bound", move |(p, q, r, s)| p + q + r + s <= max_degree)
        .prop_map(|(p, q, r, s)| NormalMonomial::new(p, q, r, s))
}

pub fn arb_operator(max_degree: u32) -> impl Strategy<Value = OperatorPoly> {
    prop::collection::vec((arb_monomial(max_degree), arb_scalar_term()), 0..5).prop_map(|ts| {
        let mut op = OperatorPoly::zero();
        for (m, c) in ts {
            op.add_term(m, &c);
        }
        op
    })
}

/// Seeded random operator with `terms` terms of total degree at most `max_degree`.
pub fn random_operator<R: Rng>(rng: &mut R, max_degree: u32, terms: usize) -> OperatorPoly {
    let mut op = OperatorPoly::zero();
    while op.len() < terms {
        let m = random_monomial(rng, max_degree);
        let radicand = RADICANDS[rng.gen_range(0..RADICANDS.len())];
        let c = scalar_term(
            radicand,
            (rng.gen_range(-9..=9), rng.gen_range(1..=6)),
            (rng.gen_range(-9..=9), rng.gen_range(1..=6)),
        );
        op.add_term(m, &c);
    }
    op
}

pub fn random_monomial<R: Rng>(rng: &mut R, max_degree: u32) -> NormalMonomial {
    let degree = rng.gen_range(0..=max_degree);
    let mut e = [0u32; 4];
    for _ in 0..degree {
        e[rng.gen_range(0..4)] += 1;
    }
    NormalMonomial::new(e[0], e[1], e[2], e[3])
}
