//! Ground-truth semantics over finite data.
//!
//! Everything here works on explicit words: bounded language enumeration,
//! trace equivalence, trace-closure membership, reordering concatenation,
//! scattering witnesses and semantic reordering derivatives of finite
//! languages. The derivative engines are validated against these functions.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use crate::alphabet::{IndependenceAlphabet, Letter, Word};
use crate::classical::antimirov_step;
use crate::error::{Error, Result};
use crate::regexp::Regexp;

/// Default maximum word length accepted by the enumerating operations.
pub const DEFAULT_LENGTH_CAP: usize = 12;

/// Canonical key of the trace `[w]`: letter counts plus the projection of
/// `w` onto every pair of distinct dependent letters. Two words are trace
/// equivalent iff their keys are equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TraceKey {
    pub counts: BTreeMap<Letter, usize>,
    pub pair_projections: BTreeMap<(Letter, Letter), Word>,
}

impl TraceKey {
    pub fn of(w: &[Letter], alphabet: &IndependenceAlphabet) -> TraceKey {
        let mut counts = BTreeMap::new();
        for a in w {
            *counts.entry(a.clone()).or_insert(0) += 1;
        }
        let present: Vec<&Letter> = counts.keys().collect();
        let mut pair_projections = BTreeMap::new();
        for (i, a) in present.iter().enumerate() {
            for b in &present[i + 1..] {
                if alphabet.dependent(a, b) {
                    let proj: Word = w.iter().filter(|c| c == a || c == b).cloned().collect();
                    pair_projections.insert(((*a).clone(), (*b).clone()), proj);
                }
            }
        }
        TraceKey { counts, pair_projections }
    }
}

/// `u ∼ v` by the projection criterion.
pub fn trace_equiv(u: &[Letter], v: &[Letter], alphabet: &IndependenceAlphabet) -> bool {
    if u.len() != v.len() {
        return false;
    }
    let letters: BTreeSet<&Letter> = u.iter().chain(v.iter()).collect();
    let letters: Vec<&Letter> = letters.into_iter().collect();
    for (i, a) in letters.iter().enumerate() {
        if u.iter().filter(|c| c == a).count() != v.iter().filter(|c| c == a).count() {
            return false;
        }
        for b in &letters[i + 1..] {
            if alphabet.dependent(a, b) {
                let pu = u.iter().filter(|c| c == a || c == b);
                let pv = v.iter().filter(|c| c == a || c == b);
                if !pu.eq(pv) {
                    return false;
                }
            }
        }
    }
    true
}

/// Lazily explored classical Antimirov automaton with interned states.
struct LazyNfa {
    states: Vec<Regexp>,
    ids: HashMap<Regexp, usize>,
    trans: HashMap<(usize, Letter), Vec<usize>>,
}

impl LazyNfa {
    fn new(e: &Regexp) -> LazyNfa {
        let mut nfa = LazyNfa { states: Vec::new(), ids: HashMap::new(), trans: HashMap::new() };
        nfa.intern(e.clone());
        nfa
    }

    fn intern(&mut self, e: Regexp) -> usize {
        if let Some(&id) = self.ids.get(&e) {
            return id;
        }
        let id = self.states.len();
        self.ids.insert(e.clone(), id);
        self.states.push(e);
        id
    }

    fn step(&mut self, q: usize, a: &Letter) -> Vec<usize> {
        if let Some(v) = self.trans.get(&(q, a.clone())) {
            return v.clone();
        }
        let succ: Vec<Regexp> = antimirov_step(&self.states[q], a).into_iter().collect();
        let ids: Vec<usize> = succ.into_iter().map(|s| self.intern(s)).collect();
        self.trans.insert((q, a.clone()), ids.clone());
        ids
    }

    fn nullable(&self, q: usize) -> bool {
        self.states[q].nullable()
    }
}

/// `{ w ∈ ⟦e⟧ : |w| ≤ max_len }`, with `max_len` limited to [`DEFAULT_LENGTH_CAP`].
pub fn enumerate_language(e: &Regexp, max_len: usize) -> Result<BTreeSet<Word>> {
    enumerate_language_capped(e, max_len, DEFAULT_LENGTH_CAP)
}

pub fn enumerate_language_capped(e: &Regexp, max_len: usize, cap: usize) -> Result<BTreeSet<Word>> {
    if max_len > cap {
        return Err(Error::CapExceeded { requested: max_len, cap });
    }
    let letters: Vec<Letter> = e.letters().into_iter().collect();
    let mut nfa = LazyNfa::new(e);
    let mut out = BTreeSet::new();
    let mut frontier: Vec<(Vec<Letter>, BTreeSet<usize>)> = vec![(Vec::new(), BTreeSet::from([0]))];
    for len in 0..=max_len {
        let mut next = Vec::new();
        for (word, states) in &frontier {
            if states.iter().any(|&q| nfa.nullable(q)) {
                out.insert(Word::from(word.clone()));
            }
            if len == max_len {
                continue;
            }
            for a in &letters {
                let succ: BTreeSet<usize> = states.iter().flat_map(|&q| nfa.step(q, a)).collect();
                if !succ.is_empty() {
                    let mut w2 = word.clone();
                    w2.push(a.clone());
                    next.push((w2, succ));
                }
            }
        }
        frontier = next;
    }
    Ok(out)
}

/// Positions of `w` (as a bitmask over `remaining`) that can come first in a
/// linearization of the rest of the trace.
fn minimal_positions(w: &[Letter], consumed: u128, alphabet: &IndependenceAlphabet) -> Vec<usize> {
    let mut out = Vec::new();
    let mut blocked: Vec<&Letter> = Vec::new();
    for (p, a) in w.iter().enumerate() {
        if consumed & (1u128 << p) != 0 {
            continue;
        }
        if blocked.iter().all(|b| alphabet.independent(a, b)) {
            out.push(p);
        }
        blocked.push(a);
    }
    out
}

fn check_length(w: &[Letter]) {
    assert!(w.len() <= 128, "trace search supports words of length at most 128");
}

/// `w ∈ [⟦e⟧]`: some `z ∈ ⟦e⟧` with `z ∼ w`. Searches the linearizations of
/// the trace of `w` against the classical Antimirov automaton of `e`.
pub fn closure_member_oracle(e: &Regexp, w: &[Letter], alphabet: &IndependenceAlphabet) -> bool {
    check_length(w);
    let full: u128 = if w.len() == 128 { u128::MAX } else { (1u128 << w.len()) - 1 };
    let mut nfa = LazyNfa::new(e);
    let mut seen: HashSet<(u128, usize)> = HashSet::new();
    let mut stack = vec![(0u128, 0usize)];
    while let Some((mask, q)) = stack.pop() {
        if !seen.insert((mask, q)) {
            continue;
        }
        if mask == full {
            if nfa.nullable(q) {
                return true;
            }
            continue;
        }
        for p in minimal_positions(w, mask, alphabet) {
            for q2 in nfa.step(q, &w[p]) {
                stack.push((mask | (1u128 << p), q2));
            }
        }
    }
    false
}

/// All `z ∈ ⟦e⟧` with `z ∼ w`.
pub fn closure_witnesses(e: &Regexp, w: &[Letter], alphabet: &IndependenceAlphabet) -> BTreeSet<Word> {
    check_length(w);
    let mut nfa = LazyNfa::new(e);
    let mut out = BTreeSet::new();
    let mut prefix = Vec::new();
    witnesses_rec(w, alphabet, &mut nfa, 0, &BTreeSet::from([0]), &mut prefix, &mut out);
    out
}

fn witnesses_rec(
    w: &[Letter],
    alphabet: &IndependenceAlphabet,
    nfa: &mut LazyNfa,
    mask: u128,
    states: &BTreeSet<usize>,
    prefix: &mut Vec<Letter>,
    out: &mut BTreeSet<Word>,
) {
    if prefix.len() == w.len() {
        if states.iter().any(|&q| nfa.nullable(q)) {
            out.insert(Word::from(prefix.clone()));
        }
        return;
    }
    for p in minimal_positions(w, mask, alphabet) {
        let succ: BTreeSet<usize> = states.iter().flat_map(|&q| nfa.step(q, &w[p])).collect();
        if succ.is_empty() {
            continue;
        }
        prefix.push(w[p].clone());
        witnesses_rec(w, alphabet, nfa, mask | (1u128 << p), &succ, prefix, out);
        prefix.pop();
    }
}

/// The trace `[w]` as an explicit set of words.
pub fn trace_class(w: &[Letter], alphabet: &IndependenceAlphabet) -> BTreeSet<Word> {
    check_length(w);
    let mut out = BTreeSet::new();
    let mut prefix = Vec::new();
    class_rec(w, alphabet, 0, &mut prefix, &mut out);
    out
}

fn class_rec(w: &[Letter], alphabet: &IndependenceAlphabet, mask: u128, prefix: &mut Vec<Letter>, out: &mut BTreeSet<Word>) {
    if prefix.len() == w.len() {
        out.insert(Word::from(prefix.clone()));
        return;
    }
    for p in minimal_positions(w, mask, alphabet) {
        prefix.push(w[p].clone());
        class_rec(w, alphabet, mask | (1u128 << p), prefix, out);
        prefix.pop();
    }
}

/// The trace closure `[L]` of a finite language.
pub fn closure_of(language: &BTreeSet<Word>, alphabet: &IndependenceAlphabet) -> BTreeSet<Word> {
    language.iter().flat_map(|z| trace_class(z, alphabet)).collect()
}

/// `u ·ᴵ v`, the reordering concatenation of two words.
pub fn reorder_concat(u: &[Letter], v: &[Letter], alphabet: &IndependenceAlphabet) -> BTreeSet<Word> {
    let mut memo = HashMap::new();
    reorder_concat_rec(u, v, alphabet, &mut memo)
}

fn reorder_concat_rec(
    u: &[Letter],
    v: &[Letter],
    alphabet: &IndependenceAlphabet,
    memo: &mut HashMap<(usize, usize), BTreeSet<Word>>,
) -> BTreeSet<Word> {
    if u.is_empty() {
        return BTreeSet::from([Word::from(v.to_vec())]);
    }
    if v.is_empty() {
        return BTreeSet::from([Word::from(u.to_vec())]);
    }
    if let Some(r) = memo.get(&(u.len(), v.len())) {
        return r.clone();
    }
    let mut out = BTreeSet::new();
    let a = &u[0];
    for rest in reorder_concat_rec(&u[1..], v, alphabet, memo) {
        let mut z = vec![a.clone()];
        z.extend(rest.iter().cloned());
        out.insert(Word::from(z));
    }
    let b = &v[0];
    if alphabet.independent_of_all(b, u) {
        for rest in reorder_concat_rec(u, &v[1..], alphabet, memo) {
            let mut z = vec![b.clone()];
            z.extend(rest.iter().cloned());
            out.insert(Word::from(z));
        }
    }
    memo.insert((u.len(), v.len()), out.clone());
    out
}

/// Lifting of `·ᴵ` to finite languages.
pub fn reorder_concat_languages(
    l1: &BTreeSet<Word>,
    l2: &BTreeSet<Word>,
    alphabet: &IndependenceAlphabet,
) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    for u in l1 {
        for v in l2 {
            out.extend(reorder_concat(u, v, alphabet));
        }
    }
    out
}

/// How the prefix `u` must relate to the scattered blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScatterMode {
    /// `u ◁ z ▷ v`: the blocks concatenate to `u` exactly.
    Strict,
    /// `u ~◁ z ▷ v`: the blocks concatenate to some `u' ∼ u`.
    PrefixEquiv,
    /// `u ~◁ z ▷~ v`: as `PrefixEquiv`; the caller compares the suffix
    /// up to `∼` (see [`scatters_between`]).
    BothEquiv,
}

/// A decomposition `z = v₀u₁v₁…uₙvₙ` with `v_j I u_i` for all `j < i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScatterWitness {
    pub u_blocks: Vec<Word>,
    pub v_blocks: Vec<Word>,
    pub degree: usize,
}

impl ScatterWitness {
    /// `u₁…uₙ`
    pub fn prefix(&self) -> Word {
        self.u_blocks.iter().flat_map(|b| b.iter().cloned()).collect()
    }

    /// `v₀…vₙ`
    pub fn suffix(&self) -> Word {
        self.v_blocks.iter().flat_map(|b| b.iter().cloned()).collect()
    }

    /// `v₀u₁v₁…uₙvₙ`
    pub fn scattered_word(&self) -> Word {
        let mut out = self.v_blocks[0].clone().into_letters();
        for (u, v) in self.u_blocks.iter().zip(&self.v_blocks[1..]) {
            out.extend(u.iter().cloned());
            out.extend(v.iter().cloned());
        }
        Word::from(out)
    }

    /// Re-checks the side conditions of the decomposition.
    pub fn is_valid(&self, alphabet: &IndependenceAlphabet) -> bool {
        let n = self.degree;
        if self.u_blocks.len() != n || self.v_blocks.len() != n + 1 {
            return false;
        }
        if self.u_blocks.iter().any(|b| b.is_empty()) {
            return false;
        }
        if n >= 2 && self.v_blocks[1..n].iter().any(|b| b.is_empty()) {
            return false;
        }
        (0..n).all(|i| (0..=i).all(|j| alphabet.words_independent(&self.v_blocks[j], &self.u_blocks[i])))
    }
}

/// Decides `u ◁ z ▷ _` or `u ~◁ z ▷ _` and returns the witness.
///
/// The witness is unique: independence is irreflexive, so the occurrences of
/// each letter `a` taken into `u` must be the first `|u|_a` occurrences of
/// `a` in `z`. The chosen positions are therefore forced by the letter
/// counts of `u`, and only the independence side-condition and the order of
/// the chosen subword remain to be checked. `max_degree` bounds `n`.
pub fn scatter_check(
    u: &[Letter],
    z: &[Letter],
    alphabet: &IndependenceAlphabet,
    mode: ScatterMode,
    max_degree: Option<usize>,
) -> Option<ScatterWitness> {
    let mut need: BTreeMap<&Letter, usize> = BTreeMap::new();
    for a in u {
        *need.entry(a).or_insert(0) += 1;
    }
    let mut chosen = vec![false; z.len()];
    let mut skipped: BTreeSet<&Letter> = BTreeSet::new();
    for (p, a) in z.iter().enumerate() {
        match need.get_mut(a) {
            Some(k) if *k > 0 => {
                if !skipped.iter().all(|b| alphabet.independent(a, b)) {
                    return None;
                }
                *k -= 1;
                chosen[p] = true;
            }
            _ => {
                skipped.insert(a);
            }
        }
    }
    if need.values().any(|&k| k > 0) {
        return None;
    }
    let picked: Vec<Letter> = z.iter().zip(&chosen).filter(|(_, &c)| c).map(|(a, _)| a.clone()).collect();
    let prefix_ok = match mode {
        ScatterMode::Strict => picked.as_slice() == u,
        ScatterMode::PrefixEquiv | ScatterMode::BothEquiv => trace_equiv(&picked, u, alphabet),
    };
    if !prefix_ok {
        return None;
    }
    let mut u_blocks: Vec<Word> = Vec::new();
    let mut v_blocks: Vec<Word> = vec![Word::empty()];
    for (p, a) in z.iter().enumerate() {
        if chosen[p] {
            if p == 0 || !chosen[p - 1] {
                u_blocks.push(Word::empty());
            }
            u_blocks.last_mut().expect("block opened").push(a.clone());
        } else {
            if p > 0 && chosen[p - 1] {
                v_blocks.push(Word::empty());
            }
            v_blocks.last_mut().expect("block opened").push(a.clone());
        }
    }
    if chosen.last() == Some(&true) {
        v_blocks.push(Word::empty());
    }
    let degree = u_blocks.len();
    if max_degree.is_some_and(|n| degree > n) {
        return None;
    }
    Some(ScatterWitness { u_blocks, v_blocks, degree })
}

/// `u ~◁_N z ▷~ v`, with `max_degree = None` for the unbounded relation.
pub fn scatters_between(
    u: &[Letter],
    z: &[Letter],
    v: &[Letter],
    alphabet: &IndependenceAlphabet,
    max_degree: Option<usize>,
) -> bool {
    scatter_check(u, z, alphabet, ScatterMode::BothEquiv, max_degree)
        .is_some_and(|wit| trace_equiv(&wit.suffix(), v, alphabet))
}

/// Whether the dependence graph of `w` is connected. Equal letters are
/// dependent, so connectivity of the dependence relation restricted to the
/// letters of `w` decides it. The empty word counts as connected.
pub fn word_connected(w: &[Letter], alphabet: &IndependenceAlphabet) -> bool {
    let letters: Vec<Letter> = w.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    letters_connected(&letters, alphabet)
}

pub(crate) fn letters_connected(letters: &[Letter], alphabet: &IndependenceAlphabet) -> bool {
    if letters.is_empty() {
        return true;
    }
    let mut seen = vec![false; letters.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..letters.len() {
            if !seen[j] && alphabet.dependent(&letters[i], &letters[j]) {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// `Dᴵ_u L = { v | ∃ z ∈ L. u ~◁ z ▷ v }` for a finite `L`.
pub fn semantic_reorder_derivative(
    language: &BTreeSet<Word>,
    u: &[Letter],
    alphabet: &IndependenceAlphabet,
) -> BTreeSet<Word> {
    language
        .iter()
        .filter_map(|z| scatter_check(u, z, alphabet, ScatterMode::PrefixEquiv, None))
        .map(|wit| wit.suffix())
        .collect()
}

/// `Rᴵ_u L = { v ∈ L | v I u }` for a finite `L`.
pub fn semantic_reorderable_part(
    language: &BTreeSet<Word>,
    u: &[Letter],
    alphabet: &IndependenceAlphabet,
) -> BTreeSet<Word> {
    language.iter().filter(|v| alphabet.words_independent(v, u)).cloned().collect()
}

/// All words over `letters` of length at most `max_len`, shortlex.
pub fn all_words(letters: &[Letter], max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for a in letters {
                let mut w2 = w.clone();
                w2.push(a.clone());
                next.push(w2);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_regexp_unchecked as re;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn words(xs: &[&str]) -> BTreeSet<Word> {
        xs.iter().map(|s| w(s)).collect()
    }

    fn alpha(text: &str) -> IndependenceAlphabet {
        IndependenceAlphabet::parse(text).unwrap()
    }

    fn ab_indep() -> IndependenceAlphabet {
        alpha("letters: a b\nindep: a b")
    }

    #[test]
    fn trace_equivalence_examples() {
        let ab = ab_indep();
        assert!(trace_equiv(&w("ab"), &w("ba"), &ab));
        assert!(trace_equiv(&w("abab"), &w("aabb"), &ab));
        let dep = alpha("letters: a b\nindep:");
        assert!(!trace_equiv(&w("ab"), &w("ba"), &dep));
        let abc = alpha("letters: a b c\nindep: a b, a c");
        assert!(trace_equiv(&w("abc"), &w("bca"), &abc));
        assert!(!trace_equiv(&w("abc"), &w("acb"), &abc));
    }

    #[test]
    fn trace_key_agrees_with_trace_equiv() {
        let abc = alpha("letters: a b c\nindep: a b, a c");
        for u in all_words(&[Letter::new("a"), Letter::new("b"), Letter::new("c")], 4) {
            for v in trace_class(&u, &abc) {
                assert_eq!(TraceKey::of(&u, &abc), TraceKey::of(&v, &abc));
            }
        }
        assert_ne!(TraceKey::of(&w("bc"), &abc), TraceKey::of(&w("cb"), &abc));
    }

    #[test]
    fn enumerates_bounded_languages() {
        assert_eq!(enumerate_language(&re("(ab)*").unwrap(), 4).unwrap(), words(&["", "ab", "abab"]));
        assert!(enumerate_language(&re("0").unwrap(), 9).unwrap().is_empty());
        assert_eq!(enumerate_language(&re("aa+ab+b").unwrap(), 2).unwrap(), words(&["aa", "ab", "b"]));
        assert_eq!(
            enumerate_language(&re("a").unwrap(), 13).unwrap_err(),
            Error::CapExceeded { requested: 13, cap: 12 }
        );
    }

    #[test]
    fn closure_membership_examples() {
        let ab = ab_indep();
        let e = re("(ab)*").unwrap();
        assert!(closure_member_oracle(&e, &w("aabb"), &ab));
        assert!(!closure_member_oracle(&e, &w("aab"), &ab));
        assert!(closure_member_oracle(&re("a*b*").unwrap(), &w(""), &ab));
        assert!(!closure_member_oracle(&re("a+b").unwrap(), &w(""), &ab));
    }

    #[test]
    fn witnesses_of_a_closure_word() {
        let ab = ab_indep();
        let e = re("(ab)*(a*+b*)").unwrap();
        assert_eq!(closure_witnesses(&e, &w("aabb"), &ab), words(&["abab"]));
        assert_eq!(trace_class(&w("ab"), &ab), words(&["ab", "ba"]));
    }

    #[test]
    fn reordering_concatenation_examples() {
        let ab = ab_indep();
        assert_eq!(reorder_concat(&w("a"), &w("b"), &ab), words(&["ab", "ba"]));
        assert_eq!(reorder_concat(&w("ab"), &w("ba"), &ab), words(&["abba"]));
        assert_eq!(reorder_concat(&w("aa"), &w("b"), &ab), words(&["aab", "aba", "baa"]));
        assert_eq!(reorder_concat(&w("a"), &w("bb"), &ab), words(&["abb", "bab", "bba"]));
        let dep = alpha("letters: a b\nindep:");
        assert_eq!(reorder_concat(&w("ab"), &w("ba"), &dep), words(&["abba"]));
        assert_eq!(reorder_concat(&w("a"), &w("b"), &dep), words(&["ab"]));
    }

    #[test]
    fn scatter_examples() {
        let abc = alpha("letters: a b c\nindep: a b, a c");
        let z = w("aabcba");
        let wit = scatter_check(&w("ab"), &z, &abc, ScatterMode::Strict, None).unwrap();
        assert_eq!(wit.u_blocks, vec![w("a"), w("b")]);
        assert_eq!(wit.v_blocks, vec![w(""), w("a"), w("cba")]);
        assert_eq!(wit.degree, 2);
        assert!(wit.is_valid(&abc));
        assert_eq!(wit.scattered_word(), z);

        assert!(scatter_check(&w("ba"), &z, &abc, ScatterMode::Strict, None).is_none());

        let wit = scatter_check(&w("ba"), &z, &abc, ScatterMode::PrefixEquiv, None).unwrap();
        assert_eq!(wit.prefix(), w("ab"));
        assert_eq!(wit.suffix(), w("acba"));
        assert_eq!(wit.degree, 2);
        assert!(scatter_check(&w("ba"), &z, &abc, ScatterMode::PrefixEquiv, Some(1)).is_none());

        // aa, a ◁ z ▷ ε, bcb, ε
        let wit = scatter_check(&w("aaa"), &z, &abc, ScatterMode::Strict, None).unwrap();
        assert_eq!(wit.u_blocks, vec![w("aa"), w("a")]);
        assert_eq!(wit.v_blocks, vec![w(""), w("bcb"), w("")]);
    }

    #[test]
    fn scatter_of_empty_prefix_has_degree_zero() {
        let abc = alpha("letters: a b c\nindep: a b, a c");
        for mode in [ScatterMode::Strict, ScatterMode::PrefixEquiv, ScatterMode::BothEquiv] {
            let wit = scatter_check(&w(""), &w("cab"), &abc, mode, Some(0)).unwrap();
            assert_eq!(wit.degree, 0);
            assert_eq!(wit.v_blocks, vec![w("cab")]);
        }
    }

    #[test]
    fn connectedness_of_words() {
        let ab = ab_indep();
        assert!(!word_connected(&w("ab"), &ab));
        assert!(word_connected(&w("a"), &ab));
        assert!(word_connected(&w("aaa"), &ab));
        let abc = alpha("letters: a b c\nindep: a b");
        assert!(word_connected(&w("acb"), &abc));
    }

    #[test]
    fn semantic_derivative_examples() {
        let abc = alpha("letters: a b c\nindep: a b");
        let l = words(&["", "a", "b", "ca", "aa", "bbb", "babca", "abbaba"]);
        assert_eq!(semantic_reorderable_part(&l, &w("a"), &abc), words(&["", "b", "bbb"]));
        assert_eq!(semantic_reorderable_part(&l, &w("aa"), &abc), words(&["", "b", "bbb"]));
        assert_eq!(semantic_reorder_derivative(&l, &w("a"), &abc), words(&["", "a", "bbca", "bbaba"]));
        assert_eq!(semantic_reorder_derivative(&l, &w("aa"), &abc), words(&["", "bbba"]));
        assert_eq!(semantic_reorder_derivative(&l, &w(""), &abc), l);
        assert_eq!(semantic_reorderable_part(&l, &w(""), &abc), l);
        assert!(semantic_reorderable_part(&words(&["ab"]), &w("b"), &ab_indep()).is_empty());
    }
}
