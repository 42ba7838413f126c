//! Test-only reference semantics and generators.
//!
//! `lang` computes bounded languages directly from the set semantics of
//! regular expressions, and `swap_class` computes traces by exhaustive
//! adjacent swaps. Neither shares code with the library's derivative-based
//! enumeration or its downset search.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use proptest::prelude::*;
use proptest::sample::select;
use rand::Rng;
use trace_derivatives::alphabet::{IndependenceAlphabet, Letter, Word};
use trace_derivatives::regexp::{Node, Regexp};

pub fn l(s: &str) -> Letter {
    Letter::new(s)
}

pub fn w(s: &str) -> Word {
    Word::parse(s).unwrap()
}

pub fn re(s: &str) -> Regexp {
    trace_derivatives::parse::parse_regexp_unchecked(s).unwrap()
}

pub fn alpha(text: &str) -> IndependenceAlphabet {
    IndependenceAlphabet::parse(text).unwrap()
}

pub fn words(xs: &[&str]) -> BTreeSet<Word> {
    xs.iter().map(|s| w(s)).collect()
}

/// `⟦e⟧ ∩ Σ^{≤n}` from the set semantics.
pub fn lang(e: &Regexp, n: usize) -> BTreeSet<Word> {
    match e.node() {
        Node::Zero => BTreeSet::new(),
        Node::One => BTreeSet::from([Word::empty()]),
        Node::Letter(a) => {
            if n >= 1 {
                BTreeSet::from([Word::from(vec![a.clone()])])
            } else {
                BTreeSet::new()
            }
        }
        Node::Sum(f, g) => lang(f, n).union(&lang(g, n)).cloned().collect(),
        Node::Cat(f, g) => concat(&lang(f, n), &lang(g, n), n),
        Node::Star(f) => {
            let body = lang(f, n);
            let mut acc = BTreeSet::from([Word::empty()]);
            loop {
                let next: BTreeSet<Word> = acc.union(&concat(&acc, &body, n)).cloned().collect();
                if next.len() == acc.len() {
                    return acc;
                }
                acc = next;
            }
        }
    }
}

pub fn concat(x: &BTreeSet<Word>, y: &BTreeSet<Word>, n: usize) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    for u in x {
        for v in y {
            if u.len() + v.len() <= n {
                out.insert(u.concat(v));
            }
        }
    }
    out
}

/// `[w]` by breadth-first search over swaps of adjacent independent letters.
pub fn swap_class(word: &Word, alphabet: &IndependenceAlphabet) -> BTreeSet<Word> {
    let mut seen = BTreeSet::from([word.clone()]);
    let mut queue = VecDeque::from([word.clone()]);
    while let Some(x) = queue.pop_front() {
        for i in 0..x.len().saturating_sub(1) {
            if alphabet.independent(&x[i], &x[i + 1]) {
                let mut y = x.clone().into_letters();
                y.swap(i, i + 1);
                let y = Word::from(y);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
    }
    seen
}

pub fn swap_closure(language: &BTreeSet<Word>, alphabet: &IndependenceAlphabet) -> BTreeSet<Word> {
    language.iter().flat_map(|z| swap_class(z, alphabet)).collect()
}

/// All words over `letters` of length at most `n`.
pub fn words_upto(letters: &[Letter], n: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..n {
        layer = layer
            .iter()
            .flat_map(|x| {
                letters.iter().map(move |a| {
                    let mut y = x.clone();
                    y.push(a.clone());
                    y
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

const NAMES: [&str; 3] = ["a", "b", "c"];

/// An alphabet on the first `n` of a, b, c with independence chosen by the
/// bits of `mask` over the pairs ab, ac, bc.
pub fn alphabet_from_mask(n: usize, mask: u8) -> IndependenceAlphabet {
    let letters: Vec<Letter> = NAMES[..n].iter().map(|s| l(s)).collect();
    let pairs = [(0, 1), (0, 2), (1, 2)];
    let chosen: Vec<(Letter, Letter)> = pairs
        .iter()
        .enumerate()
        .filter(|(k, (i, j))| mask & (1 << k) != 0 && *i < n && *j < n)
        .map(|(_, (i, j))| (letters[*i].clone(), letters[*j].clone()))
        .collect();
    IndependenceAlphabet::new(letters, chosen).unwrap()
}

pub fn arb_alphabet() -> impl Strategy<Value = IndependenceAlphabet> {
    (1usize..=3, 0u8..8).prop_map(|(n, mask)| alphabet_from_mask(n, mask))
}

pub fn arb_regexp(letters: Vec<Letter>) -> impl Strategy<Value = Regexp> {
    let leaf = prop_oneof![
        1 => Just(Regexp::zero()),
        1 => Just(Regexp::one()),
        4 => select(letters).prop_map(Regexp::letter),
    ];
    leaf.prop_recursive(4, 10, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(e, f)| Regexp::sum(e, f)),
            (inner.clone(), inner.clone()).prop_map(|(e, f)| Regexp::cat(e, f)),
            inner.prop_map(Regexp::star),
        ]
    })
    .prop_filter("at most 10 nodes", |e| e.node_count() <= 10)
}

pub fn arb_word(letters: Vec<Letter>, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(select(letters), 0..=max_len).prop_map(Word::from)
}

/// An alphabet together with a regexp over it.
pub fn arb_case() -> impl Strategy<Value = (IndependenceAlphabet, Regexp)> {
    arb_alphabet().prop_flat_map(|a| {
        let letters = a.letters().to_vec();
        (Just(a), arb_regexp(letters))
    })
}

/// An alphabet, a regexp over it and a word over it.
pub fn arb_case_with_word(max_len: usize) -> impl Strategy<Value = (IndependenceAlphabet, Regexp, Word)> {
    arb_alphabet().prop_flat_map(move |a| {
        let letters = a.letters().to_vec();
        (Just(a), arb_regexp(letters.clone()), arb_word(letters, max_len))
    })
}

/// A random regexp with exactly `size` nodes over `letters`.
pub fn random_regexp<R: Rng>(rng: &mut R, letters: &[Letter], size: usize) -> Regexp {
    if size <= 1 {
        return match rng.gen_range(0..6) {
            0 => Regexp::zero(),
            1 => Regexp::one(),
            _ => Regexp::letter(letters[rng.gen_range(0..letters.len())].clone()),
        };
    }
    if size == 2 {
        return Regexp::star(random_regexp(rng, letters, 1));
    }
    match rng.gen_range(0..5) {
        0 => Regexp::star(random_regexp(rng, letters, size - 1)),
        op => {
            let left = rng.gen_range(1..size - 1);
            let (e, f) = (random_regexp(rng, letters, left), random_regexp(rng, letters, size - 1 - left));
            if op <= 2 {
                Regexp::sum(e, f)
            } else {
                Regexp::cat(e, f)
            }
        }
    }
}

/// A random alphabet of 1 to 3 letters with random independence.
pub fn random_alphabet<R: Rng>(rng: &mut R) -> IndependenceAlphabet {
    alphabet_from_mask(rng.gen_range(1..=3), rng.gen_range(0..8))
}
