//! Normal forms modulo small equational theories, used to quotient the
//! state spaces of the derivative automata.
//!
//! * `T0`: `+` is associative, commutative and idempotent with unit `0`;
//!   `·` is associative with unit `1` and zero `0`.
//! * `T1`: `T0` plus `F*F* = F*`, `0* = 1` and `1* = 1`.
//!
//! Normal sums are left-nested chains of summands sorted by display order;
//! normal products are left-nested chains of factors.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::regexp::{Node, Regexp};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoryTier {
    T0,
    T1,
}

pub fn normalize(e: &Regexp, tier: TheoryTier) -> Regexp {
    normalize_memo(e, tier, &mut HashMap::new())
}

// Derivatives share subterms heavily, so results are cached per call.
fn normalize_memo(e: &Regexp, tier: TheoryTier, memo: &mut HashMap<usize, Regexp>) -> Regexp {
    if let Some(n) = memo.get(&e.addr()) {
        return n.clone();
    }
    let n = match e.node() {
        Node::Zero | Node::One | Node::Letter(_) => e.clone(),
        Node::Sum(..) => {
            let mut raw = Vec::new();
            flatten_sum(e, &mut raw);
            let mut terms = Vec::new();
            for t in &raw {
                flatten_sum(&normalize_memo(t, tier, memo), &mut terms);
            }
            terms.retain(|t| !t.is_zero());
            let mut keyed: Vec<(Vec<(u8, String)>, Regexp)> = terms.into_iter().map(|t| (t.display_key(), t)).collect();
            keyed.sort_by(|x, y| x.0.cmp(&y.0));
            keyed.dedup_by(|x, y| x.1 == y.1);
            keyed.into_iter().map(|(_, t)| t).reduce(Regexp::sum).unwrap_or_else(Regexp::zero)
        }
        Node::Cat(f, g) => {
            // the left operand is normalized as a whole, so long left-nested
            // chains are handled one link at a time through the memo
            let head = normalize_memo(f, tier, memo);
            if head.is_zero() {
                memo.insert(e.addr(), head.clone());
                return head;
            }
            let mut raw = Vec::new();
            flatten_cat(g, &mut raw);
            let mut factors = Vec::new();
            for x in &raw {
                flatten_cat(&normalize_memo(x, tier, memo), &mut factors);
            }
            if factors.iter().any(Regexp::is_zero) {
                Regexp::zero()
            } else {
                // `head` is a normal left-nested chain; only its last factor
                // can interact with what follows
                let mut acc = head;
                for x in factors {
                    if x.is_one() {
                        continue;
                    }
                    if acc.is_one() {
                        acc = x;
                        continue;
                    }
                    let last = match acc.node() {
                        Node::Cat(_, l) => l,
                        _ => &acc,
                    };
                    if tier == TheoryTier::T1 && matches!(x.node(), Node::Star(_)) && *last == x {
                        continue;
                    }
                    acc = Regexp::cat(acc, x);
                }
                acc
            }
        }
        Node::Star(f) => {
            let body = normalize_memo(f, tier, memo);
            if tier == TheoryTier::T1 && (body.is_zero() || body.is_one()) {
                Regexp::one()
            } else {
                Regexp::star(body)
            }
        }
    };
    memo.insert(e.addr(), n.clone());
    n
}

fn flatten_sum(e: &Regexp, out: &mut Vec<Regexp>) {
    match e.node() {
        Node::Sum(f, g) => {
            flatten_sum(f, out);
            flatten_sum(g, out);
        }
        _ => out.push(e.clone()),
    }
}

fn flatten_cat(e: &Regexp, out: &mut Vec<Regexp>) {
    match e.node() {
        Node::Cat(f, g) => {
            flatten_cat(f, out);
            flatten_cat(g, out);
        }
        _ => out.push(e.clone()),
    }
}

/// Whether `e` and `f` have the same normal form under `tier`.
pub fn equal_mod(e: &Regexp, f: &Regexp, tier: TheoryTier) -> bool {
    normalize(e, tier) == normalize(f, tier)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_regexp_unchecked as re;

    fn t0(s: &str) -> String {
        normalize(&re(s).unwrap(), TheoryTier::T0).to_string()
    }

    fn t1(s: &str) -> String {
        normalize(&re(s).unwrap(), TheoryTier::T1).to_string()
    }

    #[test]
    fn examples() {
        assert_eq!(t0("(0a+a0)+((0b+a1)+1)"), "a+1");
        assert_eq!(t1("(aa+a0+0)*"), "(aa)*");
        assert_eq!(t1("0*"), "1");
        assert_eq!(t0("0*"), "0*");
        assert_eq!(t0("0+(b+a)"), "a+b");
    }

    #[test]
    fn products_nest_to_the_left() {
        assert_eq!(t0("a(b(cd))"), "abcd");
        assert_eq!(normalize(&re("a(bc)").unwrap(), TheoryTier::T0), re("abc").unwrap());
        assert_eq!(t0("1a1(1b)"), "ab");
        assert_eq!(t0("a(b0)c"), "0");
        assert_eq!(t0("1*1"), "1*");
    }

    #[test]
    fn equal_mod_examples() {
        let (e, f) = (re("a1").unwrap(), re("a").unwrap());
        assert!(equal_mod(&e, &f, TheoryTier::T0));
        assert!(equal_mod(&re("a+b").unwrap(), &re("b+a").unwrap(), TheoryTier::T0));
        let (s, ss) = (re("a*").unwrap(), re("a*a*").unwrap());
        assert!(!equal_mod(&s, &ss, TheoryTier::T0));
        assert!(equal_mod(&s, &ss, TheoryTier::T1));
        assert!(equal_mod(&re("a*(a*a*)").unwrap(), &s, TheoryTier::T1));
    }

    #[test]
    fn idempotent_on_examples() {
        for s in ["(aa+a0+0)*((0a+a0)+(0b+a1)+1)(aa+ab+b)*", "b+a+(c+a)", "(1+0)*a*(a*1)", "((a+b)(c+1))*"] {
            for tier in [TheoryTier::T0, TheoryTier::T1] {
                let n = normalize(&re(s).unwrap(), tier);
                assert_eq!(normalize(&n, tier), n, "{s}");
            }
        }
    }
}
