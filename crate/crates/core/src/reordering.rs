//! Reordering derivatives: the syntactic reorderable part `Rᴵ_X`, the
//! Brzozowski reordering derivative `Dᴵ_a` and the Antimirov reordering
//! parts-of-derivatives `→ᴵ`.

use std::collections::{BTreeSet, HashMap};

use crate::alphabet::{IndependenceAlphabet, Letter};
use crate::regexp::{Node, Regexp};

/// `Rᴵ_X e`: every letter dependent on some member of `X` replaced by `0`.
/// With `X = Σ(u)` this is `Rᴵ_u e`.
pub fn reorderable_part(e: &Regexp, x: &BTreeSet<Letter>, alphabet: &IndependenceAlphabet) -> Regexp {
    if x.is_empty() {
        return e.clone();
    }
    replace_letters(e, &|b| alphabet.independent_of_all(b, x))
}

/// `Rᴵ_a e`
pub fn reorderable_part_letter(e: &Regexp, a: &Letter, alphabet: &IndependenceAlphabet) -> Regexp {
    replace_letters(e, &|b| alphabet.independent(a, b))
}

fn replace_letters(e: &Regexp, keep: &dyn Fn(&Letter) -> bool) -> Regexp {
    match e.node() {
        Node::Zero | Node::One => e.clone(),
        Node::Letter(b) => {
            if keep(b) {
                e.clone()
            } else {
                Regexp::zero()
            }
        }
        Node::Sum(f, g) => Regexp::sum(replace_letters(f, keep), replace_letters(g, keep)),
        Node::Cat(f, g) => Regexp::cat(replace_letters(f, keep), replace_letters(g, keep)),
        Node::Star(f) => Regexp::star(replace_letters(f, keep)),
    }
}

/// `Dᴵ_a e`
pub fn brz_reorder_step(e: &Regexp, a: &Letter, alphabet: &IndependenceAlphabet) -> Regexp {
    StepCtx::new(a, alphabet, false).derive(e)
}

/// `Dᴵ_u e`, letter by letter from the left.
pub fn brz_reorder_derive(e: &Regexp, u: &[Letter], alphabet: &IndependenceAlphabet) -> Regexp {
    u.iter().fold(e.clone(), |acc, a| brz_reorder_step(&acc, a, alphabet))
}

/// `{ E' | e →ᴵ (a, E') }`
pub fn antimirov_reorder_step(e: &Regexp, a: &Letter, alphabet: &IndependenceAlphabet) -> BTreeSet<Regexp> {
    StepCtx::new(a, alphabet, false).parts(e)
}

/// [`antimirov_reorder_step`] without the parts that denote the empty
/// language. Such parts are dead states, so acceptance is unchanged.
pub fn antimirov_reorder_live_step(e: &Regexp, a: &Letter, alphabet: &IndependenceAlphabet) -> BTreeSet<Regexp> {
    StepCtx::new(a, alphabet, true).parts(e)
}

struct StepCtx<'a> {
    a: &'a Letter,
    alphabet: &'a IndependenceAlphabet,
    live: bool,
    // terms share subterms heavily, so both are cached by node identity
    reordered: HashMap<usize, Regexp>,
    derived: HashMap<usize, Regexp>,
}

impl<'a> StepCtx<'a> {
    fn new(a: &'a Letter, alphabet: &'a IndependenceAlphabet, live: bool) -> Self {
        StepCtx { a, alphabet, live, reordered: HashMap::new(), derived: HashMap::new() }
    }

    fn derive(&mut self, e: &Regexp) -> Regexp {
        if let Some(d) = self.derived.get(&e.addr()) {
            return d.clone();
        }
        let d = match e.node() {
            Node::Zero | Node::One => Regexp::zero(),
            Node::Letter(b) => {
                if self.a == b {
                    Regexp::one()
                } else {
                    Regexp::zero()
                }
            }
            Node::Sum(f, g) => Regexp::sum(self.derive(f), self.derive(g)),
            Node::Cat(f, g) => {
                let left = Regexp::cat(self.derive(f), g.clone());
                let rf = self.reorder(f);
                Regexp::sum(left, Regexp::cat(rf, self.derive(g)))
            }
            Node::Star(f) => {
                let rs = Regexp::star(self.reorder(f));
                Regexp::cat(Regexp::cat(rs, self.derive(f)), e.clone())
            }
        };
        self.derived.insert(e.addr(), d.clone());
        d
    }

    fn parts(&mut self, e: &Regexp) -> BTreeSet<Regexp> {
        let mut out = BTreeSet::new();
        self.step_into(e, &mut out);
        out
    }

    fn reorder(&mut self, e: &Regexp) -> Regexp {
        if let Some(r) = self.reordered.get(&e.addr()) {
            return r.clone();
        }
        let r = match e.node() {
            Node::Zero | Node::One => e.clone(),
            Node::Letter(b) => {
                if self.alphabet.independent(self.a, b) {
                    e.clone()
                } else {
                    Regexp::zero()
                }
            }
            Node::Sum(f, g) => Regexp::sum(self.reorder(f), self.reorder(g)),
            Node::Cat(f, g) => Regexp::cat(self.reorder(f), self.reorder(g)),
            Node::Star(f) => Regexp::star(self.reorder(f)),
        };
        self.reordered.insert(e.addr(), r.clone());
        r
    }

    fn keep(&self, part: Regexp, out: &mut BTreeSet<Regexp>) {
        if !(self.live && part.is_empty_language()) {
            out.insert(part);
        }
    }

    fn step_into(&mut self, e: &Regexp, out: &mut BTreeSet<Regexp>) {
        match e.node() {
            Node::Zero | Node::One => {}
            Node::Letter(b) => {
                if self.a == b {
                    out.insert(Regexp::one());
                }
            }
            Node::Sum(f, g) => {
                self.step_into(f, out);
                self.step_into(g, out);
            }
            Node::Cat(f, g) => {
                if self.live && g.is_empty_language() {
                    return;
                }
                for f1 in self.parts(f) {
                    self.keep(Regexp::cat(f1, g.clone()), out);
                }
                let right = self.parts(g);
                if !right.is_empty() {
                    let rf = self.reorder(f);
                    for g1 in right {
                        self.keep(Regexp::cat(rf.clone(), g1), out);
                    }
                }
            }
            Node::Star(f) => {
                let parts = self.parts(f);
                if !parts.is_empty() {
                    let rs = Regexp::star(self.reorder(f));
                    for f1 in parts {
                        self.keep(Regexp::cat(Regexp::cat(rs.clone(), f1), e.clone()), out);
                    }
                }
            }
        }
    }
}

/// All `E'` with `e →ᴵ* (u, E')`.
pub fn antimirov_reorder_parts(e: &Regexp, u: &[Letter], alphabet: &IndependenceAlphabet) -> BTreeSet<Regexp> {
    let mut current = BTreeSet::from([e.clone()]);
    for a in u {
        current = current.iter().flat_map(|q| antimirov_reorder_step(q, a, alphabet)).collect();
        if current.is_empty() {
            break;
        }
    }
    current
}
