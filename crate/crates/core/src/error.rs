use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("empty input")]
    Empty,

    #[error("duplicate entry {0} in sequence")]
    Duplicate(String),

    #[error("length {len} out of range 1..={max}")]
    OutOfRange { len: usize, max: usize },

    #[error("{what} requires length at least {min}, got {len}")]
    TooShort {
        what: &'static str,
        min: usize,
        len: usize,
    },

    #[error("{bottom} is not below {top}")]
    NotComparable { bottom: String, top: String },

    #[error("top element has length {len}, above the limit of {limit} (use --force to override)")]
    Guardrail { len: usize, limit: usize },

    #[error("letter {0:?} is not in the alphabet")]
    ForeignLetter(String),

    #[error("permutation contains 213 or 231 at position {position}")]
    NotAvoider { position: usize },

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("cache i/o: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
