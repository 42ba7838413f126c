use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown letter `{0}` (not declared in the alphabet)")]
    UnknownLetter(String),

    #[error("independence must be irreflexive, but `{0} {0}` was declared")]
    ReflexivePair(String),

    #[error("letter `{0}` used in an independence pair but not declared")]
    UndeclaredLetter(String),

    #[error("duplicate letter `{0}` in declaration")]
    DuplicateLetter(String),

    #[error("malformed alphabet file, line {line}: {msg}")]
    AlphabetFormat { line: usize, msg: String },

    #[error("length bound {requested} exceeds the configured cap {cap}")]
    CapExceeded { requested: usize, cap: usize },

    #[error("state list of length {len} exceeds the bound N+1 = {max}")]
    ListTooLong { len: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
