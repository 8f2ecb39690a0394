//! Text syntax for words and noncommutative polynomials.
//!
//! ```text
//! word   := "e" | letter ("." letter)* | uint ("," uint)*
//! letter := "y" uint
//! poly   := ["+" | "-"] term (("+" | "-") term)*
//! term   := rational ["*" yword] | yword
//! yword  := "e" | letter ("." letter)*
//! ```
//!
//! Whitespace is allowed between tokens. A bare rational is a multiple of the
//! empty word.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{NCPoly, Rational, Word};
use crate::error::ParseError;

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Self {
            src: s.as_bytes(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.pos, msg)
    }

    fn expect_end(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        match self.peek() {
            None => Ok(()),
            Some(b) => Err(self.err(format!("unexpected character `{}`", b as char))),
        }
    }

    fn digits(&mut self) -> Result<&'a str, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a digit"));
        }
        // ASCII digits only, so this slice is valid UTF-8.
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap_or_default())
    }

    fn index(&mut self) -> Result<u32, ParseError> {
        let start = self.pos;
        let s = self.digits()?;
        s.parse::<u32>()
            .map_err(|_| ParseError::new(start, format!("letter index `{s}` is too large")))
    }

    fn bigint(&mut self) -> Result<BigInt, ParseError> {
        let s = self.digits()?;
        Ok(s.parse::<BigInt>().unwrap_or_default())
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let num = self.bigint()?;
        if self.eat(b'/') {
            let at = self.pos;
            let den = self.bigint()?;
            if den.is_zero() {
                return Err(ParseError::new(at, "zero denominator"));
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    /// `e` or `y<i>(.y<i>)*`
    fn y_word(&mut self) -> Result<Word, ParseError> {
        if self.eat(b'e') {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        loop {
            if !self.eat(b'y') {
                return Err(self.err("expected a letter `y<index>`"));
            }
            letters.push(self.index()?);
            if !self.eat(b'.') {
                break;
            }
        }
        Ok(Word::new(letters))
    }
}

/// Parses `y2.y1.y5`, `2,1,5` or `e`.
pub fn parse_word(s: &str) -> Result<Word, ParseError> {
    let mut c = Cursor::new(s);
    c.skip_ws();
    let word = match c.peek() {
        Some(b) if b.is_ascii_digit() => {
            let mut letters = vec![c.index()?];
            loop {
                c.skip_ws();
                if !c.eat(b',') {
                    break;
                }
                c.skip_ws();
                letters.push(c.index()?);
            }
            Word::new(letters)
        }
        Some(b'e' | b'y') => c.y_word()?,
        Some(b) => return Err(c.err(format!("unexpected character `{}`", b as char))),
        None => return Err(c.err("empty input; use `e` for the empty word")),
    };
    c.expect_end()?;
    Ok(word)
}

/// Parses `3/2*y2.y1 + y0 - 1/6*e`.
pub fn parse_ncpoly(s: &str) -> Result<NCPoly, ParseError> {
    let mut c = Cursor::new(s);
    let mut poly = NCPoly::zero();
    let mut first = true;
    loop {
        c.skip_ws();
        let negative = if c.eat(b'-') {
            true
        } else if c.eat(b'+') || first {
            false
        } else {
            break;
        };
        c.skip_ws();
        let (word, coeff) = match c.peek() {
            Some(b) if b.is_ascii_digit() => {
                let coeff = c.rational()?;
                c.skip_ws();
                if c.eat(b'*') {
                    c.skip_ws();
                    (c.y_word()?, coeff)
                } else {
                    (Word::empty(), coeff)
                }
            }
            Some(b'e' | b'y') => (c.y_word()?, Rational::one()),
            Some(b) => return Err(c.err(format!("unexpected character `{}`", b as char))),
            None => return Err(c.err("expected a term")),
        };
        poly.add_term(word, if negative { -coeff } else { coeff });
        first = false;
    }
    c.expect_end()?;
    Ok(poly)
}

/// Parses `p/q` or `p` with an optional leading sign.
pub fn parse_rational(s: &str) -> Result<Rational, ParseError> {
    let mut c = Cursor::new(s);
    c.skip_ws();
    let negative = c.eat(b'-');
    if !negative {
        c.eat(b'+');
    }
    let r = c.rational()?;
    c.expect_end()?;
    Ok(if negative { -r } else { r })
}
