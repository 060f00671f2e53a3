#![allow(dead_code)]

use landau_core::radical::rational;
use landau_core::ParameterSet;

pub fn corpus() -> Vec<&'static str> {
    include_str!("../fixtures/corpus.txt")
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .collect()
}

/// `(offset, input)` pairs that must fail with a syntax error at `offset`.
pub fn malformed() -> Vec<(usize, &'static str)> {
    include_str!("../fixtures/malformed.txt")
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| {
            let (offset, input) = l.split_once(" |").expect("fixture line has a separator");
            (offset.parse().unwrap(), input.strip_prefix(' ').unwrap_or(input))
        })
        .collect()
}

pub fn param_grid() -> Vec<ParameterSet> {
    vec![
        ParameterSet::unit(rational(2, 1)).unwrap(),
        ParameterSet::unit(rational(-2, 1)).unwrap(),
        ParameterSet::new(rational(3, 7), rational(5, 2), rational(11, 3), rational(13, 4)).unwrap(),
        ParameterSet::new(rational(9, 5), rational(2, 3), rational(1, 6), rational(-17, 9)).unwrap(),
    ]
}
