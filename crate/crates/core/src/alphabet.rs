//! Letters, words and independence alphabets.
//!
//! An [`IndependenceAlphabet`] is a finite set of letters together with an
//! irreflexive, symmetric independence relation. Dependence is its
//! complement and is therefore reflexive.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Characters with a fixed meaning in the inline regexp and word syntax.
pub(crate) const RESERVED: &[char] = &['(', ')', '+', '*', '0', '1', '\'', ',', '#', '[', ']', ';'];

/// A single letter of the alphabet. Letters are ordered by their symbol.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(Arc<str>);

impl Letter {
    pub fn new(symbol: &str) -> Letter {
        Letter(Arc::from(symbol))
    }

    pub fn symbol(&self) -> &str {
        &self.0
    }

    /// Whether the letter can be written as a bare character in regexp syntax.
    pub fn is_bare(&self) -> bool {
        let mut chars = self.0.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => !c.is_whitespace() && !RESERVED.contains(&c) && c != 'ε',
            _ => false,
        }
    }

    pub(crate) fn is_valid_symbol(symbol: &str) -> bool {
        !symbol.is_empty()
            && symbol != "ε"
            && symbol
                .chars()
                .all(|c| !c.is_whitespace() && !['(', ')', '+', '*', '\'', ',', '#', '[', ']', ';'].contains(&c))
            && symbol != "0"
            && symbol != "1"
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_bare() {
            f.write_str(&self.0)
        } else {
            write!(f, "'{}'", self.0)
        }
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<&str> for Letter {
    fn from(s: &str) -> Letter {
        Letter::new(s)
    }
}

/// A finite word. Words order shortlex: shorter words first, then
/// lexicographically by letter.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn push(&mut self, a: Letter) {
        self.0.push(a);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Word(v)
    }

    /// The set of letters occurring in the word.
    pub fn alphabet(&self) -> BTreeSet<Letter> {
        self.0.iter().cloned().collect()
    }

    pub fn count(&self, a: &Letter) -> usize {
        self.0.iter().filter(|b| *b == a).count()
    }

    /// Parses a word written as juxtaposed letters, e.g. `aab` or `a'tok'b`.
    /// The empty string and `ε` denote the empty word.
    pub fn parse(text: &str) -> Result<Word> {
        let trimmed = text.trim();
        if trimmed == "ε" {
            return Ok(Word::empty());
        }
        let chars: Vec<(usize, char)> = trimmed.char_indices().collect();
        let mut out = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let (pos, c) = chars[i];
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            if c == '\'' {
                let start = i + 1;
                let mut j = start;
                while j < chars.len() && chars[j].1 != '\'' {
                    j += 1;
                }
                if j == chars.len() {
                    return Err(Error::Syntax { pos, msg: "unterminated quoted letter".into() });
                }
                let sym: String = chars[start..j].iter().map(|&(_, c)| c).collect();
                if !Letter::is_valid_symbol(&sym) {
                    return Err(Error::Syntax { pos, msg: format!("invalid letter `{sym}`") });
                }
                out.push(Letter::new(&sym));
                i = j + 1;
                continue;
            }
            let sym = c.to_string();
            if !Letter::new(&sym).is_bare() {
                return Err(Error::Syntax { pos, msg: format!("`{c}` is not a letter") });
            }
            out.push(Letter::new(&sym));
            i += 1;
        }
        Ok(Word(out))
    }

    /// Parses a word and checks every letter against `alphabet`.
    pub fn parse_in(text: &str, alphabet: &IndependenceAlphabet) -> Result<Word> {
        let w = Word::parse(text)?;
        for a in w.iter() {
            if !alphabet.contains(a) {
                return Err(Error::UnknownLetter(a.symbol().to_string()));
            }
        }
        Ok(w)
    }
}

impl Deref for Word {
    type Target = [Letter];
    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Word {
        Word(v)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Word {
        Word(iter.into_iter().collect())
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Word) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Word) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        for a in &self.0 {
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite alphabet with an irreflexive symmetric independence relation.
#[derive(Clone, PartialEq, Eq)]
pub struct IndependenceAlphabet {
    letters: Vec<Letter>,
    index: BTreeMap<Letter, usize>,
    // row-major |Σ|×|Σ| matrix, symmetric with a false diagonal
    indep: Vec<bool>,
}

impl IndependenceAlphabet {
    /// Builds an alphabet from letters (in declaration order) and unordered
    /// independence pairs.
    pub fn new<L, P>(letters: L, pairs: P) -> Result<IndependenceAlphabet>
    where
        L: IntoIterator<Item = Letter>,
        P: IntoIterator<Item = (Letter, Letter)>,
    {
        let mut alphabet = IndependenceAlphabet { letters: Vec::new(), index: BTreeMap::new(), indep: Vec::new() };
        for a in letters {
            if alphabet.index.contains_key(&a) {
                return Err(Error::DuplicateLetter(a.symbol().to_string()));
            }
            alphabet.index.insert(a.clone(), alphabet.letters.len());
            alphabet.letters.push(a);
        }
        let n = alphabet.letters.len();
        alphabet.indep = vec![false; n * n];
        for (a, b) in pairs {
            if a == b {
                return Err(Error::ReflexivePair(a.symbol().to_string()));
            }
            let i = alphabet.index_of(&a).ok_or_else(|| Error::UndeclaredLetter(a.symbol().to_string()))?;
            let j = alphabet.index_of(&b).ok_or_else(|| Error::UndeclaredLetter(b.symbol().to_string()))?;
            alphabet.indep[i * n + j] = true;
            alphabet.indep[j * n + i] = true;
        }
        Ok(alphabet)
    }

    /// All letters pairwise dependent (the free monoid).
    pub fn with_no_independence<L: IntoIterator<Item = Letter>>(letters: L) -> Result<IndependenceAlphabet> {
        IndependenceAlphabet::new(letters, Vec::new())
    }

    /// All distinct letters pairwise independent (the free commutative monoid).
    pub fn with_full_independence<L: IntoIterator<Item = Letter>>(letters: L) -> Result<IndependenceAlphabet> {
        let letters: Vec<Letter> = letters.into_iter().collect();
        let mut pairs = Vec::new();
        for (i, a) in letters.iter().enumerate() {
            for b in &letters[i + 1..] {
                pairs.push((a.clone(), b.clone()));
            }
        }
        IndependenceAlphabet::new(letters, pairs)
    }

    /// Letters in declaration order.
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn contains(&self, a: &Letter) -> bool {
        self.index.contains_key(a)
    }

    pub fn index_of(&self, a: &Letter) -> Option<usize> {
        self.index.get(a).copied()
    }

    /// `a I b`. Letters outside the alphabet are dependent on everything.
    pub fn independent(&self, a: &Letter, b: &Letter) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => self.indep[i * self.letters.len() + j],
            _ => false,
        }
    }

    pub fn dependent(&self, a: &Letter, b: &Letter) -> bool {
        !self.independent(a, b)
    }

    /// `u I v`: every letter of `u` is independent of every letter of `v`.
    pub fn words_independent(&self, u: &[Letter], v: &[Letter]) -> bool {
        u.iter().all(|a| v.iter().all(|b| self.independent(a, b)))
    }

    /// Whether `a` is independent of every letter in `xs`.
    pub fn independent_of_all<'a, I>(&self, a: &Letter, xs: I) -> bool
    where
        I: IntoIterator<Item = &'a Letter>,
    {
        xs.into_iter().all(|x| self.independent(a, x))
    }

    /// Independence pairs with the smaller letter (declaration order) first.
    pub fn independence_pairs(&self) -> Vec<(Letter, Letter)> {
        let n = self.letters.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.indep[i * n + j] {
                    out.push((self.letters[i].clone(), self.letters[j].clone()));
                }
            }
        }
        out
    }

    /// Returns a copy that also declares `extra` letters, dependent on all others.
    pub fn extended<I: IntoIterator<Item = Letter>>(&self, extra: I) -> IndependenceAlphabet {
        let mut letters = self.letters.clone();
        for a in extra {
            if !letters.contains(&a) {
                letters.push(a);
            }
        }
        IndependenceAlphabet::new(letters, self.independence_pairs()).expect("extension keeps the relation valid")
    }

    /// Parses the alphabet file format:
    ///
    /// ```text
    /// # comment
    /// letters: a b c
    /// indep: a b, a c
    /// ```
    pub fn parse(text: &str) -> Result<IndependenceAlphabet> {
        let mut letters: Option<Vec<Letter>> = None;
        let mut pairs = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let line_no = lineno + 1;
            let (key, rest) = line
                .split_once(':')
                .ok_or_else(|| Error::AlphabetFormat { line: line_no, msg: "expected `letters:` or `indep:`".into() })?;
            match key.trim() {
                "letters" => {
                    if letters.is_some() {
                        return Err(Error::AlphabetFormat { line: line_no, msg: "`letters:` given twice".into() });
                    }
                    let mut ls = Vec::new();
                    for tok in rest.split_whitespace() {
                        if !Letter::is_valid_symbol(tok) {
                            return Err(Error::AlphabetFormat { line: line_no, msg: format!("invalid letter `{tok}`") });
                        }
                        ls.push(Letter::new(tok));
                    }
                    letters = Some(ls);
                }
                "indep" => {
                    for group in rest.split(',') {
                        let toks: Vec<&str> = group.split_whitespace().collect();
                        match toks.as_slice() {
                            [] => {}
                            [a, b] => pairs.push((Letter::new(a), Letter::new(b))),
                            _ => {
                                return Err(Error::AlphabetFormat {
                                    line: line_no,
                                    msg: format!("independence pair `{}` must name exactly two letters", group.trim()),
                                })
                            }
                        }
                    }
                }
                other => {
                    return Err(Error::AlphabetFormat { line: line_no, msg: format!("unknown key `{other}`") });
                }
            }
        }
        let letters = letters.ok_or(Error::AlphabetFormat { line: 0, msg: "missing `letters:` line".into() })?;
        IndependenceAlphabet::new(letters, pairs)
    }
}

impl fmt::Display for IndependenceAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "letters:")?;
        for a in &self.letters {
            write!(f, " {}", a.symbol())?;
        }
        writeln!(f)?;
        write!(f, "indep:")?;
        let pairs = self.independence_pairs();
        for (k, (a, b)) in pairs.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, " {} {}", a.symbol(), b.symbol())?;
        }
        writeln!(f)
    }
}

impl fmt::Debug for IndependenceAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self.independence_pairs().iter().map(|(a, b)| format!("{a}{b}")).collect();
        write!(f, "IndependenceAlphabet({:?}; I={{{}}})", self.letters, pairs.join(","))
    }
}
