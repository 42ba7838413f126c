//! Refined Antimirov reordering derivatives.
//!
//! A refined step `E →ᴵ (a; E_l, E_r)` splits `E` around one occurrence of
//! `a`: `E_l` describes what may stay to the left of it (necessarily
//! independent of `a`) and `E_r` what follows. States are nonempty lists
//! `E₀, …, Eₙ` of regexps describing the gaps `v₀, …, vₙ` around the blocks of
//! the consumed prefix; the `N`-bounded variant keeps lists of length at most
//! `N + 1`.
//!
//! All products are built in one fixed grouping, shared with
//! [`refined_closure_sets`]:
//!
//! ```text
//! EF left:   (E_l, Cat(E_r, F))
//! EF right:  (Cat(Rᴵ_a E, F_l), F_r)
//! E*:        (Cat(Star(Rᴵ_a E), E_l), Cat(E_r, Star(E)))
//! ```

use std::collections::BTreeSet;
use std::fmt;

use crate::alphabet::{IndependenceAlphabet, Letter};
use crate::error::{Error, Result};
use crate::regexp::{Node, Regexp};
use crate::reordering::{reorderable_part, reorderable_part_letter};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SplitPair {
    pub left: Regexp,
    pub right: Regexp,
}

impl fmt::Display for SplitPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.left, self.right)
    }
}

/// A nonempty list of regexps `E₀, …, Eₙ`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StateList(Vec<Regexp>);

impl StateList {
    /// Panics on an empty list.
    pub fn new(items: Vec<Regexp>) -> StateList {
        assert!(!items.is_empty(), "state lists are nonempty");
        StateList(items)
    }

    pub fn singleton(e: Regexp) -> StateList {
        StateList(vec![e])
    }

    pub fn items(&self) -> &[Regexp] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Two components, both nullable.
    pub fn is_accepting_pair(&self) -> bool {
        self.0.len() == 2 && self.0.iter().all(Regexp::nullable)
    }

    pub fn map(&self, f: impl Fn(&Regexp) -> Regexp) -> StateList {
        StateList(self.0.iter().map(f).collect())
    }
}

impl fmt::Display for StateList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for StateList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All `(E_l, E_r)` with `e →ᴵ (a; E_l, E_r)`.
pub fn refined_split_step(e: &Regexp, a: &Letter, alphabet: &IndependenceAlphabet) -> BTreeSet<SplitPair> {
    let mut out = BTreeSet::new();
    split_into(e, a, alphabet, &mut out);
    out
}

fn split_into(e: &Regexp, a: &Letter, alphabet: &IndependenceAlphabet, out: &mut BTreeSet<SplitPair>) {
    match e.node() {
        Node::Zero | Node::One => {}
        Node::Letter(b) => {
            if a == b {
                out.insert(SplitPair { left: Regexp::one(), right: Regexp::one() });
            }
        }
        Node::Sum(f, g) => {
            split_into(f, a, alphabet, out);
            split_into(g, a, alphabet, out);
        }
        Node::Cat(f, g) => {
            for p in refined_split_step(f, a, alphabet) {
                out.insert(SplitPair { left: p.left, right: Regexp::cat(p.right, g.clone()) });
            }
            let right = refined_split_step(g, a, alphabet);
            if !right.is_empty() {
                let rf = reorderable_part_letter(f, a, alphabet);
                for p in right {
                    out.insert(SplitPair { left: Regexp::cat(rf.clone(), p.left), right: p.right });
                }
            }
        }
        Node::Star(f) => {
            let parts = refined_split_step(f, a, alphabet);
            if !parts.is_empty() {
                let rs = Regexp::star(reorderable_part_letter(f, a, alphabet));
                for p in parts {
                    out.insert(SplitPair {
                        left: Regexp::cat(rs.clone(), p.left),
                        right: Regexp::cat(p.right, e.clone()),
                    });
                }
            }
        }
    }
}

/// All `Γ'` with `g ⇒ᴵ (a; Γ')`, or `g ⇒ᴵ_N (a; Γ')` when `bound = Some(N)`.
pub fn list_step(
    g: &StateList,
    a: &Letter,
    alphabet: &IndependenceAlphabet,
    bound: Option<usize>,
) -> Result<BTreeSet<StateList>> {
    if let Some(n) = bound {
        if g.len() > n + 1 {
            return Err(Error::ListTooLong { len: g.len(), max: n + 1 });
        }
    }
    Ok(list_step_unchecked(g, a, alphabet, bound))
}

fn list_step_unchecked(
    g: &StateList,
    a: &Letter,
    alphabet: &IndependenceAlphabet,
    bound: Option<usize>,
) -> BTreeSet<StateList> {
    let items = g.items();
    let mut out = BTreeSet::new();
    // Rᴵ_a applied to each prefix, built incrementally
    let mut reduced_prefix: Vec<Regexp> = Vec::with_capacity(items.len());
    for (i, e) in items.iter().enumerate() {
        let delta = &items[i + 1..];
        let (gl, dl) = (i, delta.len());
        for p in refined_split_step(e, a, alphabet) {
            let mut emit = |middle: &[&Regexp]| {
                let mut v = reduced_prefix.clone();
                v.extend(middle.iter().map(|x| (*x).clone()));
                v.extend(delta.iter().cloned());
                out.insert(StateList(v));
            };
            if bound.is_none_or(|n| gl + dl < n) {
                emit(&[&p.left, &p.right]);
            }
            if p.left.nullable() && gl > 0 {
                emit(&[&p.right]);
            }
            if p.right.nullable() && dl > 0 {
                emit(&[&p.left]);
            }
            if p.left.nullable() && p.right.nullable() && gl > 0 && dl > 0 {
                emit(&[]);
            }
        }
        reduced_prefix.push(reorderable_part_letter(e, a, alphabet));
    }
    out
}

/// All `Γ` with `e →ᴵ* (u; Γ)` (or `→ᴵ*_N` when bounded).
pub fn refined_derive(
    e: &Regexp,
    u: &[Letter],
    alphabet: &IndependenceAlphabet,
    bound: Option<usize>,
) -> BTreeSet<StateList> {
    derive_lists(e, u, alphabet, bound, false)
}

fn derive_lists(
    e: &Regexp,
    u: &[Letter],
    alphabet: &IndependenceAlphabet,
    bound: Option<usize>,
    prune: bool,
) -> BTreeSet<StateList> {
    let mut current = BTreeSet::from([StateList::singleton(e.clone())]);
    for a in u {
        let mut next = BTreeSet::new();
        for g in &current {
            for g2 in list_step_unchecked(g, a, alphabet, bound) {
                // a list with an empty component never reaches acceptance
                if prune && g2.items().iter().any(Regexp::is_empty_language) {
                    continue;
                }
                next.insert(g2);
            }
        }
        current = next;
        if current.is_empty() {
            break;
        }
    }
    current
}

/// `u ∈ ⟦e⟧ᴵ` decided by refined derivation: `u = ε` and `e` nullable, or
/// some reachable list is a pair of nullable regexps.
pub fn refined_membership(e: &Regexp, u: &[Letter], alphabet: &IndependenceAlphabet, bound: Option<usize>) -> bool {
    if u.is_empty() {
        return e.nullable();
    }
    derive_lists(e, u, alphabet, bound, true).iter().any(StateList::is_accepting_pair)
}

/// The sets `e⇝+` and `e→* = {e} ∪ { Rᴵ_X E' | X ⊆ Σ, E' ∈ e⇝+ }`, where Σ
/// is the alphabet together with the letters of `e`.
pub fn refined_closure_sets(e: &Regexp, alphabet: &IndependenceAlphabet) -> (BTreeSet<Regexp>, BTreeSet<Regexp>) {
    let plus = squiggle_plus(e);
    let mut sigma: BTreeSet<Letter> = alphabet.letters().iter().cloned().collect();
    sigma.extend(e.letters());
    let sigma: Vec<Letter> = sigma.into_iter().collect();
    assert!(sigma.len() < 20, "closure sets range over all subsets of the alphabet");
    let mut to_star = BTreeSet::from([e.clone()]);
    for mask in 0u32..(1 << sigma.len()) {
        let x: BTreeSet<Letter> =
            sigma.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, a)| a.clone()).collect();
        for f in &plus {
            to_star.insert(reorderable_part(f, &x, alphabet));
        }
    }
    (plus, to_star)
}

fn squiggle_plus(e: &Regexp) -> BTreeSet<Regexp> {
    match e.node() {
        Node::Zero | Node::One => BTreeSet::new(),
        Node::Letter(_) => BTreeSet::from([Regexp::one()]),
        Node::Sum(f, g) => {
            let mut s = squiggle_plus(f);
            s.extend(squiggle_plus(g));
            s
        }
        Node::Cat(f, g) => {
            let (fp, gp) = (squiggle_plus(f), squiggle_plus(g));
            let mut s = BTreeSet::new();
            for f1 in &fp {
                s.insert(Regexp::cat(f1.clone(), g.clone()));
                for g1 in &gp {
                    s.insert(Regexp::cat(f1.clone(), g1.clone()));
                }
            }
            for g1 in &gp {
                s.insert(Regexp::cat(f.clone(), g1.clone()));
            }
            s.extend(fp);
            s.extend(gp);
            s
        }
        Node::Star(f) => {
            let fp = squiggle_plus(f);
            let mut s = BTreeSet::new();
            for f1 in &fp {
                s.insert(Regexp::cat(e.clone(), f1.clone()));
                s.insert(Regexp::cat(f1.clone(), e.clone()));
                for f2 in &fp {
                    s.insert(Regexp::cat(f1.clone(), Regexp::cat(e.clone(), f2.clone())));
                    s.insert(Regexp::cat(Regexp::cat(f1.clone(), e.clone()), f2.clone()));
                }
            }
            s.extend(fp);
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Word;
    use crate::parse::parse_regexp_unchecked as re;

    fn ab() -> IndependenceAlphabet {
        IndependenceAlphabet::parse("letters: a b\nindep: a b").unwrap()
    }

    fn b() -> Letter {
        Letter::new("b")
    }

    fn list(xs: &[Regexp]) -> StateList {
        StateList::new(xs.to_vec())
    }

    // E = (aa+ab+b)*, E_b = aa+a0+0
    fn e_star() -> Regexp {
        re("(aa+ab+b)*").unwrap()
    }

    fn eb_star_a1() -> Regexp {
        Regexp::cat(re("(aa+a0+0)*").unwrap(), re("a1").unwrap())
    }

    fn one_e_star() -> Regexp {
        Regexp::cat(Regexp::one(), e_star())
    }

    #[test]
    fn split_examples() {
        let a = ab();
        let pair = |l: Regexp, r: Regexp| SplitPair { left: l, right: r };
        assert_eq!(
            refined_split_step(&re("a").unwrap(), &Letter::new("a"), &a),
            BTreeSet::from([pair(Regexp::one(), Regexp::one())])
        );
        assert_eq!(
            refined_split_step(&re("aa+ab+b").unwrap(), &b(), &a),
            BTreeSet::from([pair(re("a1").unwrap(), Regexp::one()), pair(Regexp::one(), Regexp::one())])
        );
        let eb1 = Regexp::cat(re("(aa+a0+0)*").unwrap(), Regexp::one());
        assert_eq!(
            refined_split_step(&e_star(), &b(), &a),
            BTreeSet::from([pair(eb_star_a1(), one_e_star()), pair(eb1, one_e_star())])
        );
    }

    #[test]
    fn list_step_examples() {
        let a = ab();
        let g = list(&[eb_star_a1(), one_e_star()]);
        let at2 = list_step(&g, &b(), &a, Some(2)).unwrap();
        assert!(at2.contains(&list(&[eb_star_a1(), Regexp::cat(Regexp::one(), eb_star_a1()), one_e_star()])));

        let g = list(&[re("a").unwrap(), re("a*b").unwrap()]);
        let out = list_step(&g, &b(), &a, Some(2)).unwrap();
        assert!(out.contains(&list(&[re("a").unwrap(), re("a*1").unwrap(), Regexp::one()])));
        assert!(out.contains(&list(&[re("a").unwrap(), Regexp::one()])));
    }

    #[test]
    fn list_step_at_bound_one_keeps_the_list_by_dropping_a_nullable_left_part() {
        // the split (1(E_b*1), 1E*) of 1E* has a nullable left part, so
        // dropping it is allowed even though insertion is blocked
        let a = ab();
        let g = list(&[eb_star_a1(), one_e_star()]);
        assert_eq!(list_step(&g, &b(), &a, Some(1)).unwrap(), BTreeSet::from([g.clone()]));
    }

    #[test]
    fn oversized_lists_are_rejected() {
        let g = list(&[Regexp::one(), Regexp::one(), Regexp::one()]);
        assert_eq!(list_step(&g, &b(), &ab(), Some(1)).unwrap_err(), Error::ListTooLong { len: 3, max: 2 });
    }

    #[test]
    fn derive_examples() {
        let a = ab();
        let e = e_star();
        assert_eq!(refined_derive(&e, &[], &a, Some(2)), BTreeSet::from([StateList::singleton(e.clone())]));
        let bb = Word::parse("bb").unwrap();
        let reached = refined_derive(&e, &bb, &a, Some(2));
        assert!(reached.contains(&list(&[eb_star_a1(), Regexp::cat(Regexp::one(), eb_star_a1()), one_e_star()])));
        assert!(refined_membership(&e, &Word::parse("bbbaaa").unwrap(), &a, Some(2)));
        assert!(refined_membership(&re("(ab)*").unwrap(), &Word::parse("ba").unwrap(), &a, None));
        assert!(!refined_membership(&re("(ab)*").unwrap(), &Word::parse("bba").unwrap(), &a, None));
    }

    #[test]
    fn closure_set_examples() {
        let a = ab();
        assert_eq!(refined_closure_sets(&re("a").unwrap(), &a).0, BTreeSet::from([Regexp::one()]));
        assert!(refined_closure_sets(&Regexp::one(), &a).0.is_empty());
        let e = re("ab").unwrap();
        let (plus, to_star) = refined_closure_sets(&e, &a);
        let shown: BTreeSet<String> = plus.iter().map(|x| x.to_string()).collect();
        let expected: BTreeSet<String> = ["1", "1b", "a1", "11"].iter().map(|s| s.to_string()).collect();
        assert_eq!(shown, expected);
        assert!(to_star.contains(&e));
        assert!(to_star.contains(&re("01").unwrap()));
        assert!(to_star.contains(&re("10").unwrap()));
    }
}
