//! Classical Brzozowski derivatives and Antimirov parts-of-derivatives, plus
//! the finite over-approximation `E→*` of the Antimirov state set.

use std::collections::{BTreeSet, HashMap};

use crate::alphabet::Letter;
use crate::regexp::{Node, Regexp};

/// Brzozowski derivative along a single letter.
pub fn brzozowski_step(e: &Regexp, a: &Letter) -> Regexp {
    step_memo(e, a, &mut HashMap::new())
}

// derivatives of derivatives share subterms, so results are cached by node
fn step_memo(e: &Regexp, a: &Letter, memo: &mut HashMap<usize, Regexp>) -> Regexp {
    if let Some(d) = memo.get(&e.addr()) {
        return d.clone();
    }
    let d = match e.node() {
        Node::Letter(b) => {
            if a == b {
                Regexp::one()
            } else {
                Regexp::zero()
            }
        }
        Node::Zero | Node::One => Regexp::zero(),
        Node::Sum(f, g) => Regexp::sum(step_memo(f, a, memo), step_memo(g, a, memo)),
        Node::Cat(f, g) => {
            let left = Regexp::cat(step_memo(f, a, memo), g.clone());
            if f.nullable() {
                Regexp::sum(left, step_memo(g, a, memo))
            } else {
                left
            }
        }
        Node::Star(f) => Regexp::cat(step_memo(f, a, memo), e.clone()),
    };
    memo.insert(e.addr(), d.clone());
    d
}

/// Brzozowski derivative along a word: `D_ε E = E`, `D_{ua} E = D_a (D_u E)`.
pub fn brzozowski_derive(e: &Regexp, u: &[Letter]) -> Regexp {
    u.iter().fold(e.clone(), |acc, a| brzozowski_step(&acc, a))
}

/// One-letter Antimirov parts-of-derivatives `{ E' | E → (a, E') }`.
pub fn antimirov_step(e: &Regexp, a: &Letter) -> BTreeSet<Regexp> {
    let mut out = BTreeSet::new();
    antimirov_step_into(e, a, &mut out);
    out
}

fn antimirov_step_into(e: &Regexp, a: &Letter, out: &mut BTreeSet<Regexp>) {
    match e.node() {
        Node::Letter(b) => {
            if a == b {
                out.insert(Regexp::one());
            }
        }
        Node::Zero | Node::One => {}
        Node::Sum(f, g) => {
            antimirov_step_into(f, a, out);
            antimirov_step_into(g, a, out);
        }
        Node::Cat(f, g) => {
            for f1 in antimirov_step(f, a) {
                out.insert(Regexp::cat(f1, g.clone()));
            }
            if f.nullable() {
                antimirov_step_into(g, a, out);
            }
        }
        Node::Star(f) => {
            for f1 in antimirov_step(f, a) {
                out.insert(Regexp::cat(f1, e.clone()));
            }
        }
    }
}

/// All `E'` with `E →* (u, E')`.
pub fn antimirov_parts(e: &Regexp, u: &[Letter]) -> BTreeSet<Regexp> {
    let mut current = BTreeSet::from([e.clone()]);
    for a in u {
        current = current.iter().flat_map(|q| antimirov_step(q, a)).collect();
        if current.is_empty() {
            break;
        }
    }
    current
}

/// The set `E→* = {E} ∪ E→+`, which contains every reachable Antimirov state.
/// Products `E→+ · {F}` are built as single `Cat(E', F)` nodes, the same
/// grouping [`antimirov_step`] produces, so containment is structural.
pub fn classical_closure_set(e: &Regexp) -> BTreeSet<Regexp> {
    let mut out = closure_plus(e);
    out.insert(e.clone());
    out
}

fn closure_plus(e: &Regexp) -> BTreeSet<Regexp> {
    match e.node() {
        Node::Letter(_) => BTreeSet::from([Regexp::one()]),
        Node::Zero | Node::One => BTreeSet::new(),
        Node::Sum(f, g) => {
            let mut s = closure_plus(f);
            s.extend(closure_plus(g));
            s
        }
        Node::Cat(f, g) => {
            let mut s: BTreeSet<Regexp> = closure_plus(f).into_iter().map(|f1| Regexp::cat(f1, g.clone())).collect();
            s.extend(closure_plus(g));
            s
        }
        Node::Star(f) => closure_plus(f).into_iter().map(|f1| Regexp::cat(f1, e.clone())).collect(),
    }
}
