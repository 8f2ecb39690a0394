use std::fmt;

use thiserror::Error;

use crate::algebra::Word;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Malformed textual input, with the byte offset where parsing stopped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(position: usize, message: impl Into<String>) -> Self {
        Self {
            position,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error {0}")]
    Parse(#[from] ParseError),
    #[error("word {0} contains the letter y0; a word over y1, y2, ... is required")]
    ZeroLetter(Word),
    #[error("a non-empty word is required")]
    EmptyWord,
    #[error("polynomial lies in the kernel of H⁻ (its image is the zero function)")]
    InKernel,
    #[error("polynomial is not homogeneous of grade {expected}: word {word} has grade {found}")]
    MixedGrade {
        expected: usize,
        found: usize,
        word: Word,
    },
    #[error("Laurent polynomial has a u^{power} term and lies outside span{{1, Li⁻_y0, Li⁻_y1, ...}}")]
    OutsideLetterSpan { power: i64 },
    #[error("{0}")]
    Domain(String),
}
