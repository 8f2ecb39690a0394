use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;

/// A finite sequence of letters `y_{s₁}…y_{s_r}`, stored as the indices
/// `(s₁, …, s_r)`. The empty word is the unit `1`.
///
/// Words are ordered by grade `(w) + |w|`, then length, then indices; this
/// is the canonical term order of [`NCPoly`](super::NCPoly).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(indices: impl Into<Vec<u32>>) -> Self {
        Self(indices.into())
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn letter(s: u32) -> Self {
        Self(vec![s])
    }

    pub fn indices(&self) -> &[u32] {
        &self.0
    }

    /// `(w) = s₁ + … + s_r`
    pub fn weight(&self) -> usize {
        self.0.iter().map(|&s| s as usize).sum()
    }

    /// `|w| = r`
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(w) + |w|`, the degree of `H⁻_w` and of `Li⁻_w`.
    pub fn grade(&self) -> usize {
        self.weight() + self.len()
    }

    pub fn first(&self) -> Option<u32> {
        self.0.first().copied()
    }

    /// The word without its first letter (empty stays empty).
    pub fn tail(&self) -> Word {
        Word(self.0.get(1..).unwrap_or_default().to_vec())
    }

    pub fn prepend(&self, s: u32) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(s);
        v.extend_from_slice(&self.0);
        Word(v)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// The factor `s_{from+1} … s_{to}` (zero-based half-open range).
    pub fn factor(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }

    /// Non-empty suffixes, longest first.
    pub fn suffixes(&self) -> impl Iterator<Item = Word> + '_ {
        (0..self.0.len()).map(move |i| Word(self.0[i..].to_vec()))
    }

    /// True when every letter is `y_s` with `s ≥ 1`, i.e. `w ∈ Y*`.
    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&s| s > 0)
    }

    /// Indices shifted by `delta` (used to pass from `y_{n}` to `y_{n+1}`).
    pub fn shifted(&self, delta: u32) -> Word {
        Word(self.0.iter().map(|&s| s + delta).collect())
    }
}

impl From<Vec<u32>> for Word {
    fn from(v: Vec<u32>) -> Self {
        Word(v)
    }
}

impl From<&[u32]> for Word {
    fn from(v: &[u32]) -> Self {
        Word(v.to_vec())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade()
            .cmp(&other.grade())
            .then(self.len().cmp(&other.len()))
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "y{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Word {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        super::parse_word(s)
    }
}

/// All words of grade exactly `g`, in canonical order. There are `2^(g-1)`
/// of them for `g ≥ 1` (compositions of `g`).
pub fn words_of_grade(g: usize) -> Vec<Word> {
    fn rec(rest: usize, prefix: &mut Vec<u32>, out: &mut Vec<Word>) {
        if rest == 0 {
            out.push(Word(prefix.clone()));
            return;
        }
        for part in 1..=rest {
            prefix.push((part - 1) as u32);
            rec(rest - part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(g, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All words with `(w) + |w| ≤ max_grade`, including the empty word, in
/// canonical order.
pub fn words_up_to_grade(max_grade: usize) -> Vec<Word> {
    (0..=max_grade).flat_map(words_of_grade).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_and_length() {
        let w = Word::new(vec![2, 1, 5]);
        assert_eq!((w.weight(), w.len()), (8, 3));
        assert_eq!((Word::empty().weight(), Word::empty().len()), (0, 0));
        let w = Word::new(vec![0, 0]);
        assert_eq!((w.weight(), w.len()), (0, 2));
    }

    #[test]
    fn graded_order() {
        let mut ws: Vec<Word> = ["y1", "y0.y0", "y0", "e", "y2", "y0.y1", "y1.y0"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        ws.sort();
        let shown: Vec<String> = ws.iter().map(|w| w.to_string()).collect();
        assert_eq!(shown, ["e", "y0", "y1", "y0.y0", "y2", "y0.y1", "y1.y0"]);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(words_of_grade(0), vec![Word::empty()]);
        for g in 1..=8 {
            let ws = words_of_grade(g);
            assert_eq!(ws.len(), 1 << (g - 1));
            assert!(ws.iter().all(|w| w.grade() == g));
        }
        assert_eq!(words_up_to_grade(4).len(), 1 + 1 + 2 + 4 + 8);
    }
}
