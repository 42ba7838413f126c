//! Regular expression syntax trees.
//!
//! A [`Regexp`] is an immutable, reference-counted tree. Each node caches its
//! structural hash, syntactic nullability and size, so equality checks and
//! hashing of large derivative terms stay cheap. Equality is structural.

use std::cmp::Ordering;
use std::collections::hash_map::DefaultHasher;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::alphabet::Letter;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Node {
    Zero,
    One,
    Letter(Letter),
    Sum(Regexp, Regexp),
    Cat(Regexp, Regexp),
    Star(Regexp),
}

struct Inner {
    node: Node,
    hash: u64,
    nullable: bool,
    empty: bool,
    size: usize,
    width: usize,
}

#[derive(Clone)]
pub struct Regexp(Arc<Inner>);

impl Regexp {
    fn build(node: Node) -> Regexp {
        let mut h = DefaultHasher::new();
        let (nullable, size, width) = match &node {
            Node::Zero => {
                0u8.hash(&mut h);
                (false, 1, 0)
            }
            Node::One => {
                1u8.hash(&mut h);
                (true, 1, 0)
            }
            Node::Letter(a) => {
                2u8.hash(&mut h);
                a.hash(&mut h);
                (false, 1, 1)
            }
            Node::Sum(e, f) => {
                3u8.hash(&mut h);
                h.write_u64(e.0.hash);
                h.write_u64(f.0.hash);
                (e.nullable() || f.nullable(), e.0.size.saturating_add(f.0.size).saturating_add(1), e.0.width.saturating_add(f.0.width))
            }
            Node::Cat(e, f) => {
                4u8.hash(&mut h);
                h.write_u64(e.0.hash);
                h.write_u64(f.0.hash);
                (e.nullable() && f.nullable(), e.0.size.saturating_add(f.0.size).saturating_add(1), e.0.width.saturating_add(f.0.width))
            }
            Node::Star(e) => {
                5u8.hash(&mut h);
                h.write_u64(e.0.hash);
                (true, e.0.size.saturating_add(1), e.0.width)
            }
        };
        let empty = match &node {
            Node::Zero => true,
            Node::One | Node::Letter(_) | Node::Star(_) => false,
            Node::Sum(e, f) => e.0.empty && f.0.empty,
            Node::Cat(e, f) => e.0.empty || f.0.empty,
        };
        Regexp(Arc::new(Inner { node, hash: h.finish(), nullable, empty, size, width }))
    }

    pub fn zero() -> Regexp {
        Regexp::build(Node::Zero)
    }

    pub fn one() -> Regexp {
        Regexp::build(Node::One)
    }

    pub fn letter(a: Letter) -> Regexp {
        Regexp::build(Node::Letter(a))
    }

    pub fn sum(e: Regexp, f: Regexp) -> Regexp {
        Regexp::build(Node::Sum(e, f))
    }

    pub fn cat(e: Regexp, f: Regexp) -> Regexp {
        Regexp::build(Node::Cat(e, f))
    }

    pub fn star(e: Regexp) -> Regexp {
        Regexp::build(Node::Star(e))
    }

    pub fn node(&self) -> &Node {
        &self.0.node
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0.node, Node::Zero)
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0.node, Node::One)
    }

    /// Syntactic nullability `E↓`: whether ε belongs to the language.
    pub fn nullable(&self) -> bool {
        self.0.nullable
    }

    /// Whether the language is empty. Exact: only `0` leaves can make a
    /// language empty, through sums of empty terms or products with one.
    /// Identity of this node, for per-call caches over a borrowed term.
    pub(crate) fn addr(&self) -> usize {
        Arc::as_ptr(&self.0) as usize
    }

    pub fn is_empty_language(&self) -> bool {
        self.0.empty
    }

    /// Number of tree nodes.
    pub fn node_count(&self) -> usize {
        self.0.size
    }

    /// Number of letter leaves.
    pub fn alphabetic_width(&self) -> usize {
        self.0.width
    }

    /// `(node_count, alphabetic_width)`.
    pub fn size_metrics(&self) -> (usize, usize) {
        (self.0.size, self.0.width)
    }

    /// Letters occurring in the expression.
    pub fn letters(&self) -> BTreeSet<Letter> {
        let mut out = BTreeSet::new();
        self.collect_letters(&mut out);
        out
    }

    fn collect_letters(&self, out: &mut BTreeSet<Letter>) {
        match self.node() {
            Node::Zero | Node::One => {}
            Node::Letter(a) => {
                out.insert(a.clone());
            }
            Node::Sum(e, f) | Node::Cat(e, f) => {
                e.collect_letters(out);
                f.collect_letters(out);
            }
            Node::Star(e) => e.collect_letters(out),
        }
    }

    /// Token sequence of the rendered form under the display order: letters
    /// first, then `0`, `1` and punctuation. Used to sort summands and
    /// printed sets so that e.g. `a+1` comes out letter-first.
    pub fn display_key(&self) -> Vec<(u8, String)> {
        let mut out = Vec::new();
        self.push_tokens(0, &mut out);
        out
    }

    fn push_tokens(&self, ctx: u8, out: &mut Vec<(u8, String)>) {
        let prec = self.precedence();
        let paren = prec < ctx;
        if paren {
            out.push((4, "(".into()));
        }
        match self.node() {
            Node::Zero => out.push((1, String::new())),
            Node::One => out.push((2, String::new())),
            Node::Letter(a) => out.push((0, a.symbol().to_string())),
            Node::Sum(e, f) => {
                e.push_tokens(0, out);
                out.push((7, String::new()));
                f.push_tokens(1, out);
            }
            Node::Cat(e, f) => {
                e.push_tokens(1, out);
                f.push_tokens(2, out);
            }
            Node::Star(e) => {
                e.push_tokens(2, out);
                out.push((6, String::new()));
            }
        }
        if paren {
            out.push((5, ")".into()));
        }
    }

    fn precedence(&self) -> u8 {
        match self.node() {
            Node::Sum(..) => 0,
            Node::Cat(..) => 1,
            Node::Star(_) => 2,
            Node::Zero | Node::One | Node::Letter(_) => 3,
        }
    }

    fn render(&self, ctx: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let paren = self.precedence() < ctx;
        if paren {
            f.write_str("(")?;
        }
        match self.node() {
            Node::Zero => f.write_str("0")?,
            Node::One => f.write_str("1")?,
            Node::Letter(a) => write!(f, "{a}")?,
            // sums and products associate to the left, so a right operand of
            // the same operator needs parentheses
            Node::Sum(e, g) => {
                e.render(0, f)?;
                f.write_str("+")?;
                g.render(1, f)?;
            }
            Node::Cat(e, g) => {
                e.render(1, f)?;
                g.render(2, f)?;
            }
            Node::Star(e) => {
                e.render(2, f)?;
                f.write_str("*")?;
            }
        }
        if paren {
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Compares two regexps by [`Regexp::display_key`].
pub fn display_cmp(e: &Regexp, f: &Regexp) -> Ordering {
    if e == f {
        return Ordering::Equal;
    }
    e.display_key().cmp(&f.display_key())
}

/// Sorts a collection of regexps for display.
pub fn sorted_for_display<'a, I: IntoIterator<Item = &'a Regexp>>(items: I) -> Vec<&'a Regexp> {
    let mut v: Vec<&Regexp> = items.into_iter().collect();
    v.sort_by_cached_key(|e| e.display_key());
    v
}

impl PartialEq for Regexp {
    fn eq(&self, other: &Regexp) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.hash == other.0.hash && self.0.node == other.0.node)
    }
}

impl Eq for Regexp {}

impl Hash for Regexp {
    fn hash<H: Hasher>(&self, state: &mut H) {
        state.write_u64(self.0.hash);
    }
}

impl PartialOrd for Regexp {
    fn partial_cmp(&self, other: &Regexp) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Regexp {
    fn cmp(&self, other: &Regexp) -> Ordering {
        if Arc::ptr_eq(&self.0, &other.0) {
            return Ordering::Equal;
        }
        self.0.node.cmp(&other.0.node)
    }
}

/// Renders with minimal parentheses; `parse_regexp` reads the output back
/// to a structurally equal tree.
impl fmt::Display for Regexp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.render(0, f)
    }
}

impl fmt::Debug for Regexp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{self}⟩")
    }
}

/// Nullability as a free function, for symmetry with the derivative engines.
pub fn nullable(e: &Regexp) -> bool {
    e.nullable()
}

/// `(node_count, alphabetic_width)`.
pub fn size_metrics(e: &Regexp) -> (usize, usize) {
    e.size_metrics()
}
