//! Recursive-descent parser for the inline regexp syntax.
//!
//! ```text
//! E ::= E '+' E | E E | E '*' | '(' E ')' | '0' | '1' | letter
//! ```
//!
//! `*` binds tightest, then juxtaposition, then `+`; both binary operators
//! associate to the left. Whitespace is insignificant. Letters are single
//! characters, or any token in single quotes (`'send'`).

use crate::alphabet::{IndependenceAlphabet, Letter};
use crate::error::{Error, Result};
use crate::regexp::Regexp;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    LParen,
    RParen,
    Plus,
    Star,
    Zero,
    One,
    Letter(Letter),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        i += 1;
        let tok = match c {
            c if c.is_whitespace() => continue,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '+' => Tok::Plus,
            '*' => Tok::Star,
            '0' => Tok::Zero,
            '1' => Tok::One,
            '\'' => {
                let start = i;
                while i < chars.len() && chars[i].1 != '\'' {
                    i += 1;
                }
                if i == chars.len() {
                    return Err(Error::Syntax { pos, msg: "unterminated quoted letter".into() });
                }
                let sym: String = chars[start..i].iter().map(|&(_, c)| c).collect();
                i += 1;
                if !Letter::is_valid_symbol(&sym) {
                    return Err(Error::Syntax { pos, msg: format!("invalid letter `{sym}`") });
                }
                Tok::Letter(Letter::new(&sym))
            }
            c => {
                let letter = Letter::new(&c.to_string());
                if !letter.is_bare() {
                    return Err(Error::Syntax { pos, msg: format!("unexpected character `{c}`") });
                }
                Tok::Letter(letter)
            }
        };
        out.push((pos, tok));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn sum(&mut self) -> Result<Regexp> {
        let mut e = self.cat()?;
        while self.peek() == Some(&Tok::Plus) {
            self.at += 1;
            let f = self.cat()?;
            e = Regexp::sum(e, f);
        }
        Ok(e)
    }

    fn cat(&mut self) -> Result<Regexp> {
        let mut e = self.postfix()?;
        while matches!(self.peek(), Some(Tok::LParen | Tok::Zero | Tok::One | Tok::Letter(_))) {
            let f = self.postfix()?;
            e = Regexp::cat(e, f);
        }
        Ok(e)
    }

    fn postfix(&mut self) -> Result<Regexp> {
        let mut e = self.atom()?;
        while self.peek() == Some(&Tok::Star) {
            self.at += 1;
            e = Regexp::star(e);
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<Regexp> {
        let pos = self.pos();
        let tok = self.peek().cloned();
        match tok {
            Some(Tok::LParen) => {
                self.at += 1;
                let e = self.sum()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(Error::Syntax { pos: self.pos(), msg: "expected `)`".into() });
                }
                self.at += 1;
                Ok(e)
            }
            Some(Tok::Zero) => {
                self.at += 1;
                Ok(Regexp::zero())
            }
            Some(Tok::One) => {
                self.at += 1;
                Ok(Regexp::one())
            }
            Some(Tok::Letter(a)) => {
                self.at += 1;
                Ok(Regexp::letter(a))
            }
            Some(t) => Err(Error::Syntax { pos, msg: format!("unexpected {}", describe(&t)) }),
            None => Err(Error::Syntax { pos, msg: "unexpected end of input".into() }),
        }
    }
}

fn describe(t: &Tok) -> &'static str {
    match t {
        Tok::LParen => "`(`",
        Tok::RParen => "`)`",
        Tok::Plus => "`+`",
        Tok::Star => "`*`",
        Tok::Zero | Tok::One | Tok::Letter(_) => "operand",
    }
}

/// Parses a regexp without checking its letters against an alphabet.
pub fn parse_regexp_unchecked(text: &str) -> Result<Regexp> {
    let toks = lex(text)?;
    let mut p = Parser { toks, at: 0, end: text.len() };
    let e = p.sum()?;
    if p.at < p.toks.len() {
        let (pos, t) = &p.toks[p.at];
        return Err(Error::Syntax { pos: *pos, msg: format!("unexpected {}", describe(t)) });
    }
    Ok(e)
}

/// Parses a regexp whose letters must all be declared in `alphabet`.
pub fn parse_regexp(text: &str, alphabet: &IndependenceAlphabet) -> Result<Regexp> {
    let e = parse_regexp_unchecked(text)?;
    if let Some(a) = e.letters().into_iter().find(|a| !alphabet.contains(a)) {
        return Err(Error::UnknownLetter(a.symbol().to_string()));
    }
    Ok(e)
}
