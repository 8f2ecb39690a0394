use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::rational::big;
use super::{NCPoly, Word};

/// The three products on `ℚ⟨Y₀⟩` exposed by the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Law {
    Shuffle,
    Stuffle,
    /// The `⊤` product of [`crate::toplaw`].
    Top,
}

impl Law {
    pub fn name(self) -> &'static str {
        match self {
            Law::Shuffle => "shuffle",
            Law::Stuffle => "stuffle",
            Law::Top => "top",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Law {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "shuffle" => Ok(Law::Shuffle),
            "stuffle" => Ok(Law::Stuffle),
            "top" => Ok(Law::Top),
            other => Err(format!(
                "unknown law `{other}` (expected shuffle, stuffle or top)"
            )),
        }
    }
}

type Counts = HashMap<Vec<u32>, u128>;

fn prefixed(letter: u32, sub: &Counts, into: &mut Counts) {
    for (w, &n) in sub {
        let mut key = Vec::with_capacity(w.len() + 1);
        key.push(letter);
        key.extend_from_slice(w);
        let slot = into.entry(key).or_insert(0);
        *slot = slot.checked_add(n).expect("product coefficient overflowed u128");
    }
}

/// Fills the table of products of suffix pairs `u[i..] · v[j..]` bottom-up, so
/// every subproblem is solved once. `merge` is `None` for the shuffle and
/// supplies the letter-merging term for the stuffle.
fn suffix_table(u: &[u32], v: &[u32], merge: bool) -> Counts {
    let (m, n) = (u.len(), v.len());
    let width = n + 1;
    let mut table: Vec<Counts> = vec![Counts::new(); (m + 1) * width];
    for i in (0..=m).rev() {
        for j in (0..=n).rev() {
            let mut cell = Counts::new();
            if i == m {
                cell.insert(v[j..].to_vec(), 1);
            } else if j == n {
                cell.insert(u[i..].to_vec(), 1);
            } else {
                prefixed(u[i], &table[(i + 1) * width + j], &mut cell);
                prefixed(v[j], &table[i * width + j + 1], &mut cell);
                if merge {
                    let letter = u[i].checked_add(v[j]).expect("letter index overflowed u32");
                    prefixed(letter, &table[(i + 1) * width + j + 1], &mut cell);
                }
            }
            table[i * width + j] = cell;
        }
    }
    std::mem::take(&mut table[0])
}

fn to_ncpoly(counts: Counts) -> NCPoly {
    counts
        .into_iter()
        .map(|(w, n)| (Word::new(w), big(BigInt::from(n))))
        .collect()
}

/// `u ⧢ v`: the sum over all interleavings of the letters of `u` and `v`.
pub fn shuffle(u: &Word, v: &Word) -> NCPoly {
    to_ncpoly(suffix_table(u.indices(), v.indices(), false))
}

/// `u ⋆ v`: the quasi-shuffle, where `y_i u ⋆ y_j v` also contributes
/// `y_{i+j}(u ⋆ v)`.
pub fn stuffle(u: &Word, v: &Word) -> NCPoly {
    to_ncpoly(suffix_table(u.indices(), v.indices(), true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;
    use crate::algebra::words_up_to_grade;
    use num_traits::{One, Signed};

    fn p(s: &str) -> NCPoly {
        s.parse().unwrap()
    }
    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn shuffle_examples() {
        assert_eq!(shuffle(&w("y1"), &Word::empty()), p("y1"));
        assert_eq!(shuffle(&w("y1"), &w("y2")), p("y1.y2 + y2.y1"));
        assert_eq!(
            shuffle(&w("y1"), &w("y2.y5")),
            p("y1.y2.y5 + y2.y1.y5 + y2.y5.y1")
        );
        assert_eq!(shuffle(&w("y0"), &w("y0")), p("2*y0.y0"));
    }

    #[test]
    fn stuffle_examples() {
        assert_eq!(stuffle(&w("y0"), &w("y0")), p("2*y0.y0 + y0"));
        assert_eq!(stuffle(&w("y3"), &w("y4")), p("y3.y4 + y4.y3 + y7"));
        assert_eq!(
            stuffle(&w("y1"), &w("y2.y5")),
            p("y1.y2.y5 + y2.y1.y5 + y2.y5.y1 + y3.y5 + y2.y6")
        );
        assert_eq!(
            stuffle(&w("y0.y1"), &w("y2.y3")),
            p(
                "y0.y1.y2.y3 + y0.y2.y1.y3 + y0.y2.y3.y1 + y2.y3.y0.y1 + y2.y0.y1.y3 \
               + y2.y0.y3.y1 + y0.y2.y4 + y0.y3.y3 + 2*y2.y3.y1 + y2.y1.y3 + y2.y0.y4 + y2.y4"
            )
        );
    }

    #[test]
    fn shuffle_mass_is_binomial() {
        for u in words_up_to_grade(5) {
            for v in words_up_to_grade(4) {
                let total: NCPoly = shuffle(&u, &v);
                let mass = total.terms().fold(int(0), |acc, (_, c)| acc + c);
                let n = (u.len() + v.len()) as u32;
                let k = u.len() as u32;
                assert_eq!(mass, big(crate::special::binomial(n, k)));
                assert!(total.terms().all(|(_, c)| c.is_positive() && c.denom().is_one()));
            }
        }
    }

    #[test]
    fn law_names_round_trip() {
        for law in [Law::Shuffle, Law::Stuffle, Law::Top] {
            assert_eq!(law.name().parse::<Law>().unwrap(), law);
        }
        assert!("concat".parse::<Law>().is_err());
    }
}
