//! Connectedness decisions and bounded checks of (uniform) scattering rank.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::Serialize;

use crate::alphabet::{IndependenceAlphabet, Letter, Word};
use crate::classical::antimirov_step;
use crate::error::{Error, Result};
use crate::oracle::{closure_of, closure_witnesses, enumerate_language, letters_connected, scatters_between, DEFAULT_LENGTH_CAP};
use crate::regexp::{Node, Regexp};

/// Whether every word of `⟦e⟧` is connected.
///
/// Explores the classical Antimirov automaton with states paired with the
/// set of letters read so far; at every nullable state the letter set is the
/// alphabet of an accepted word and must induce a connected dependence graph.
/// The empty word counts as connected.
pub fn language_connected(e: &Regexp, alphabet: &IndependenceAlphabet) -> bool {
    let letters: Vec<Letter> = e.letters().into_iter().collect();
    assert!(letters.len() <= 64, "letter sets are tracked as 64-bit masks");
    let mut seen: HashSet<(Regexp, u64)> = HashSet::new();
    let mut stack = vec![(e.clone(), 0u64)];
    let mut checked: HashSet<u64> = HashSet::new();
    while let Some((q, mask)) = stack.pop() {
        if !seen.insert((q.clone(), mask)) {
            continue;
        }
        if q.nullable() && checked.insert(mask) {
            let set: Vec<Letter> =
                letters.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, a)| a.clone()).collect();
            if !letters_connected(&set, alphabet) {
                return false;
            }
        }
        for (i, a) in letters.iter().enumerate() {
            for q2 in antimirov_step(&q, a) {
                stack.push((q2, mask | (1 << i)));
            }
        }
    }
    true
}

/// Every starred subexpression has a connected language.
pub fn star_connected(e: &Regexp, alphabet: &IndependenceAlphabet) -> bool {
    match e.node() {
        Node::Zero | Node::One | Node::Letter(_) => true,
        Node::Sum(f, g) | Node::Cat(f, g) => star_connected(f, alphabet) && star_connected(g, alphabet),
        Node::Star(f) => star_connected(f, alphabet) && language_connected(f, alphabet),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RankKind {
    Rank,
    UniformRank,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    HoldsUpToLength,
    Refuted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    #[serde(serialize_with = "as_text")]
    pub word: Word,
    #[serde(serialize_with = "split_as_text")]
    pub split: Option<(Word, Word)>,
}

fn as_text<S: serde::Serializer>(w: &Word, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(w)
}

fn split_as_text<S: serde::Serializer>(p: &Option<(Word, Word)>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match p {
        Some((u, v)) => s.collect_seq([u.to_string(), v.to_string()]),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankVerdict {
    pub kind: RankKind,
    pub bound: usize,
    /// Longest word checked.
    pub max_len: usize,
    pub outcome: Outcome,
    pub counterexample: Option<Counterexample>,
}

impl RankVerdict {
    pub fn holds(&self) -> bool {
        self.outcome == Outcome::HoldsUpToLength
    }
}

impl fmt::Display for RankVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            RankKind::Rank => "rank",
            RankKind::UniformRank => "uniform rank",
        };
        match &self.counterexample {
            None => write!(f, "{what} <= {} holds up to length {}", self.bound, self.max_len),
            Some(Counterexample { word, split: Some((u, v)) }) => {
                write!(f, "{what} <= {} refuted at {word} (split {u} | {v})", self.bound)
            }
            Some(Counterexample { word, split: None }) => write!(f, "{what} <= {} refuted at {word}", self.bound),
        }
    }
}

fn closure_words(e: &Regexp, alphabet: &IndependenceAlphabet, max_len: usize) -> Result<BTreeSet<Word>> {
    if max_len > DEFAULT_LENGTH_CAP {
        return Err(Error::CapExceeded { requested: max_len, cap: DEFAULT_LENGTH_CAP });
    }
    Ok(closure_of(&enumerate_language(e, max_len)?, alphabet))
}

fn split_passes(z: &Word, w: &[Letter], i: usize, alphabet: &IndependenceAlphabet, n: usize) -> bool {
    scatters_between(&w[..i], z, &w[i..], alphabet, Some(n))
}

/// Checks `∀uv ∈ [⟦e⟧]. ∃z ∈ ⟦e⟧. u ~◁_N z ▷~ v` for `|uv| ≤ max_len`,
/// sweeping closure words in shortlex order.
pub fn check_rank(e: &Regexp, alphabet: &IndependenceAlphabet, n: usize, max_len: usize) -> Result<RankVerdict> {
    let words = closure_words(e, alphabet, max_len)?;
    Ok(check_rank_on(e, alphabet, n, &words.into_iter().collect::<Vec<_>>(), max_len))
}

/// [`check_rank`] on explicit words; words outside the closure are skipped.
pub fn check_rank_on(e: &Regexp, alphabet: &IndependenceAlphabet, n: usize, words: &[Word], max_len: usize) -> RankVerdict {
    let mut verdict =
        RankVerdict { kind: RankKind::Rank, bound: n, max_len, outcome: Outcome::HoldsUpToLength, counterexample: None };
    for w in words {
        let zs = closure_witnesses(e, w, alphabet);
        if zs.is_empty() {
            continue;
        }
        for i in 0..=w.len() {
            if !zs.iter().any(|z| split_passes(z, w, i, alphabet, n)) {
                verdict.outcome = Outcome::Refuted;
                verdict.counterexample = Some(Counterexample {
                    word: w.clone(),
                    split: Some((Word::from(w[..i].to_vec()), Word::from(w[i..].to_vec()))),
                });
                return verdict;
            }
        }
    }
    verdict
}

/// Checks `∀w ∈ [⟦e⟧]. ∃z ∈ ⟦e⟧. ∀uv = w. u ~◁_N z ▷~ v` for `|w| ≤ max_len`.
pub fn check_uniform_rank(e: &Regexp, alphabet: &IndependenceAlphabet, n: usize, max_len: usize) -> Result<RankVerdict> {
    let words = closure_words(e, alphabet, max_len)?;
    Ok(check_uniform_rank_on(e, alphabet, n, &words.into_iter().collect::<Vec<_>>(), max_len))
}

/// [`check_uniform_rank`] on explicit words; words outside the closure are
/// skipped.
pub fn check_uniform_rank_on(
    e: &Regexp,
    alphabet: &IndependenceAlphabet,
    n: usize,
    words: &[Word],
    max_len: usize,
) -> RankVerdict {
    let mut verdict = RankVerdict {
        kind: RankKind::UniformRank,
        bound: n,
        max_len,
        outcome: Outcome::HoldsUpToLength,
        counterexample: None,
    };
    for w in words {
        let zs = closure_witnesses(e, w, alphabet);
        if zs.is_empty() {
            continue;
        }
        let ok = zs.iter().any(|z| (0..=w.len()).all(|i| split_passes(z, w, i, alphabet, n)));
        if !ok {
            verdict.outcome = Outcome::Refuted;
            verdict.counterexample = Some(Counterexample { word: w.clone(), split: None });
            return verdict;
        }
    }
    verdict
}
