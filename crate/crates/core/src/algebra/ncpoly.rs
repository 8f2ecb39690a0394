use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use super::rational::{self, Rational};
use super::Word;
use crate::error::ParseError;

/// A finite linear combination of words with rational coefficients, i.e. an
/// element of `ℚ⟨Y₀⟩`. Zero coefficients are never stored, so equality is
/// term-wise.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct NCPoly {
    terms: BTreeMap<Word, Rational>,
}

impl NCPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit `1 = 1·e`.
    pub fn one() -> Self {
        Self::from_word(Word::empty())
    }

    pub fn from_word(w: Word) -> Self {
        Self::term(w, Rational::one())
    }

    pub fn term(w: Word, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Rational)>) -> Self {
        let mut p = Self::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    /// Adds `c·w` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn coeff(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (ascending graded) order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Rational)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    /// Largest `(w) + |w|` over the support; `None` for the zero polynomial.
    pub fn max_grade(&self) -> Option<usize> {
        self.terms.keys().map(Word::grade).max()
    }

    /// The component made of words of grade exactly `g`.
    pub fn graded_part(&self, g: usize) -> NCPoly {
        NCPoly {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.grade() == g)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero();
        }
        NCPoly {
            terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect(),
        }
    }

    /// `a·P + b·Q`
    pub fn combine(a: &Rational, p: &NCPoly, b: &Rational, q: &NCPoly) -> NCPoly {
        let mut out = p.scale(a);
        for (w, c) in q.terms() {
            out.add_term(w.clone(), b * c);
        }
        out
    }

    /// Bilinear extension of a word-level product.
    pub fn bilinear(&self, other: &NCPoly, mut law: impl FnMut(&Word, &Word) -> NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (u, a) in self.terms() {
            for (v, b) in other.terms() {
                let ab = a * b;
                for (w, c) in law(u, v).terms {
                    out.add_term(w, c * &ab);
                }
            }
        }
        out
    }

    /// Linear extension of a word-level map into any additive target.
    pub fn linear_map<T>(&self, zero: T, mut image: impl FnMut(&Word, &Rational, T) -> T) -> T {
        self.terms().fold(zero, |acc, (w, c)| image(w, c, acc))
    }
}

impl From<Word> for NCPoly {
    fn from(w: Word) -> Self {
        NCPoly::from_word(w)
    }
}

impl FromIterator<(Word, Rational)> for NCPoly {
    fn from_iter<I: IntoIterator<Item = (Word, Rational)>>(iter: I) -> Self {
        NCPoly::from_terms(iter)
    }
}

impl Add<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        NCPoly::combine(&Rational::one(), self, &Rational::one(), rhs)
    }
}

impl Sub<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        NCPoly::combine(&Rational::one(), self, &-Rational::one(), rhs)
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        self.scale(&-Rational::one())
    }
}

impl Mul<&Rational> for &NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &Rational) -> NCPoly {
        self.scale(rhs)
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Highest grade first, e.g. `3/2*y2.y1 + y0 - 1/6*e`. The output parses back
/// with [`parse_ncpoly`](super::parse_ncpoly).
impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        rational::write_terms(
            f,
            self.terms.iter().rev().map(|(w, c)| (c.clone(), w.to_string())),
        )
    }
}

impl FromStr for NCPoly {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        super::parse_ncpoly(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn combine_merges_terms() {
        let y1 = NCPoly::from_word(w("y1"));
        let sum = NCPoly::combine(&int(1), &y1, &int(1), &y1);
        assert_eq!(sum, NCPoly::term(w("y1"), int(2)));
        assert!(NCPoly::combine(&int(1), &y1, &int(-1), &y1).is_zero());
    }

    #[test]
    fn display_is_descending_and_elides_units() {
        let p = NCPoly::from_terms([
            (w("y2.y1"), rat(3, 2)),
            (w("y0"), int(1)),
            (Word::empty(), rat(-1, 6)),
        ]);
        assert_eq!(p.to_string(), "3/2*y2.y1 + y0 - 1/6*e");
        assert_eq!(NCPoly::zero().to_string(), "0");
        assert_eq!((-&NCPoly::from_word(w("y3"))).to_string(), "-y3");
    }

    #[test]
    fn graded_part_and_max_grade() {
        let p: NCPoly = "y1.y2.y5 + y3.y5 + 2*y2.y6".parse().unwrap();
        assert_eq!(p.max_grade(), Some(11));
        assert_eq!(p.graded_part(11), NCPoly::from_word(w("y1.y2.y5")));
        assert_eq!(p.graded_part(10).len(), 2);
        assert_eq!(NCPoly::zero().max_grade(), None);
    }
}
