//! Independent normal-ordering oracle: rewrites words one adjacent swap at a
//! time using only `a a† → a† a + 1` within a mode and free cross-mode swaps.

use std::collections::BTreeMap;

use landau_core::{Ladder, NormalMonomial};

pub type Word = Vec<Ladder>;

pub fn word_of(m: &NormalMonomial) -> Word {
    let mut w = Vec::with_capacity(m.degree() as usize);
    for g in Ladder::ALL {
        w.extend(std::iter::repeat_n(g, m.exponent(g) as usize));
    }
    w
}

fn monomial_of(word: &[Ladder]) -> NormalMonomial {
    let count = |g| word.iter().filter(|&&x| x == g).count() as u32;
    NormalMonomial::new(
        count(Ladder::PlusDag),
        count(Ladder::Plus),
        count(Ladder::MinusDag),
        count(Ladder::Minus),
    )
}

/// Normal form of `word` as integer multiplicities of canonical monomials.
pub fn normal_order_by_swaps(word: Word) -> BTreeMap<NormalMonomial, i128> {
    let mut pending: BTreeMap<Word, i128> = BTreeMap::new();
    pending.insert(word, 1);
    let mut out: BTreeMap<NormalMonomial, i128> = BTreeMap::new();
    while let Some((w, count)) = pending.pop_first() {
        match (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) {
            None => *out.entry(monomial_of(&w)).or_default() += count,
            Some(i) => {
                let (x, y) = (w[i], w[i + 1]);
                let mut swapped = w.clone();
                swapped.swap(i, i + 1);
                *pending.entry(swapped).or_default() += count;
                let contracts = matches!(x, Ladder::Plus | Ladder::Minus) && y == x.dagger();
                if contracts {
                    let mut shorter = w.clone();
                    shorter.drain(i..i + 2);
                    *pending.entry(shorter).or_default() += count;
                }
            }
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Product of two canonical words via the swap rewriter.
pub fn oracle_product(a: &NormalMonomial, b: &NormalMonomial) -> BTreeMap<NormalMonomial, i128> {
    let mut w = word_of(a);
    w.extend(word_of(b));
    normal_order_by_swaps(w)
}
