//! Brute-force reference implementations shared by the integration tests.
//! Nothing here touches the tail automaton: languages come from explicit
//! rules on raw symbol strings.

#![allow(dead_code)]

use std::collections::BTreeSet;

use subshift_core::shift::desk;
use subshift_core::{Subshift, Symbol, Word};

pub struct Desk {
    pub name: &'static str,
    pub shift: Subshift,
    /// Membership in the factor language.
    pub legal: fn(&[u16]) -> bool,
}

fn full(_: &[u16]) -> bool {
    true
}

fn golden(w: &[u16]) -> bool {
    !w.windows(2).any(|p| p == [1, 1])
}

fn even(w: &[u16]) -> bool {
    let ones: Vec<usize> = (0..w.len()).filter(|i| w[*i] == 1).collect();
    ones.windows(2).all(|p| (p[1] - p[0] - 1) % 2 == 0)
}

fn two_block(w: &[u16]) -> bool {
    // a = [00], b = [01], c = [10]
    w.windows(2)
        .all(|p| matches!((p[0], p[1]), (0, 0) | (0, 1) | (1, 2) | (2, 0) | (2, 1)))
}

pub fn golden_desk() -> Desk {
    Desk {
        name: "golden mean",
        shift: desk::golden_mean(),
        legal: golden,
    }
}

pub fn full2_desk() -> Desk {
    Desk {
        name: "full 2-shift",
        shift: desk::full_shift(2),
        legal: full,
    }
}

pub fn even_desk() -> Desk {
    Desk {
        name: "even shift",
        shift: desk::even_shift(),
        legal: even,
    }
}

pub fn one_point_desk() -> Desk {
    Desk {
        name: "one-point shift",
        shift: desk::one_point(),
        legal: full,
    }
}

pub fn two_block_desk() -> Desk {
    Desk {
        name: "golden mean 2-block",
        shift: desk::golden_mean_two_block(),
        legal: two_block,
    }
}

/// The four shifts every suite runs on.
pub fn desks() -> Vec<Desk> {
    vec![full2_desk(), golden_desk(), even_desk(), one_point_desk()]
}

fn raw(w: &Word) -> Vec<u16> {
    w.iter().map(|s| s.0).collect()
}

fn all_raw(n: usize, k: usize) -> Vec<Vec<u16>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|w| (0..n as u16).map(move |a| [w.clone(), vec![a]].concat()))
            .collect();
    }
    out
}

impl Desk {
    fn n(&self) -> usize {
        self.shift.alphabet().len()
    }

    pub fn is_legal(&self, w: &Word) -> bool {
        (self.legal)(&raw(w))
    }

    /// `L^k` by filtering all words.
    pub fn language(&self, k: usize) -> Vec<Word> {
        all_raw(self.n(), k)
            .into_iter()
            .filter(|w| (self.legal)(w))
            .map(|w| w.into_iter().map(Symbol).collect())
            .collect()
    }

    /// All words of length at most `l`, legal or not.
    pub fn all_words_up_to(&self, l: usize) -> Vec<Word> {
        (0..=l)
            .flat_map(|k| all_raw(self.n(), k))
            .map(|w| w.into_iter().map(Symbol).collect())
            .collect()
    }

    /// `{β : |β| <= l, βw ∈ L}`.
    pub fn left_extensions(&self, w: &Word, l: usize) -> BTreeSet<Word> {
        self.all_words_up_to(l)
            .into_iter()
            .filter(|b| self.is_legal(&b.concat(w)))
            .collect()
    }

    /// Distinct left-extension sets over all legal windows of length `window`.
    pub fn a_partition(&self, l: usize, window: usize) -> BTreeSet<BTreeSet<Word>> {
        self.language(window)
            .iter()
            .map(|w| self.left_extensions(w, l))
            .collect()
    }

    /// Distinct `(ν, P_l(tail))` over legal windows `ν·tail` with `|ν| = k`.
    pub fn d_atoms(&self, k: usize, l: usize, window: usize) -> BTreeSet<(Word, BTreeSet<Word>)> {
        self.language(k + window)
            .iter()
            .map(|w| (w.prefix(k), self.left_extensions(&w.drop_prefix(k), l)))
            .collect()
    }

    /// `C(μ,ν) ≠ ∅`, witnessed by a window `w` with `νw` and `μw` legal.
    pub fn conditioned_nonempty(&self, mu: &Word, nu: &Word, window: usize) -> bool {
        self.language(window)
            .iter()
            .any(|w| self.is_legal(&nu.concat(w)) && self.is_legal(&mu.concat(w)))
    }
}

pub fn word(x: &Subshift, s: &str) -> Word {
    x.alphabet().parse_word(s).unwrap()
}
