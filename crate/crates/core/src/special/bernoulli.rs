use std::collections::HashMap;
use std::fmt;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::numbers::bernoulli;
use crate::algebra::rational::{int, rat};
use crate::algebra::{Rational, Word};
use crate::harmonic::solve_difference;
use crate::memo::Memo;
use crate::poly::ZPoly;

/// The free constants `b_w = B_w(0)` behind the extended Bernoulli
/// polynomials, together with a cache of the polynomials themselves.
///
/// By default `b_{y_s}` is the classical Bernoulli number and every longer
/// word gets `0`. A seeded family draws every constant (single letters
/// included) from a deterministic per-word stream, so two families built
/// from the same seed agree regardless of query order.
pub struct ExtBernoulliFamily {
    overrides: HashMap<Word, Rational>,
    seed: Option<u64>,
    cache: Memo<Word, ZPoly>,
}

impl Default for ExtBernoulliFamily {
    fn default() -> Self {
        Self::classical()
    }
}

impl fmt::Debug for ExtBernoulliFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ExtBernoulliFamily")
            .field("overrides", &self.overrides)
            .field("seed", &self.seed)
            .finish_non_exhaustive()
    }
}

fn word_rng(seed: u64, w: &Word) -> ChaCha8Rng {
    let mut state = seed;
    for &s in w.indices() {
        state = ChaCha8Rng::seed_from_u64(state ^ u64::from(s)).next_u64();
    }
    ChaCha8Rng::seed_from_u64(state ^ ((w.len() as u64) << 40))
}

impl ExtBernoulliFamily {
    pub fn classical() -> Self {
        Self {
            overrides: HashMap::new(),
            seed: None,
            cache: Memo::new(),
        }
    }

    /// Every constant is a small random rational `p/q`, `|p| ≤ 12`, `1 ≤ q ≤ 7`.
    pub fn random(seed: u64) -> Self {
        Self {
            seed: Some(seed),
            ..Self::classical()
        }
    }

    pub fn with_constant(mut self, w: Word, b: Rational) -> Self {
        self.overrides.insert(w, b);
        self.cache = Memo::new();
        self
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    /// `b_w`. The empty word always gets `1`, since `B` of it is the constant 1.
    pub fn constant(&self, w: &Word) -> Rational {
        if w.is_empty() {
            return int(1);
        }
        if let Some(b) = self.overrides.get(w) {
            return b.clone();
        }
        match (self.seed, w.indices()) {
            (Some(seed), _) => {
                let mut rng = word_rng(seed, w);
                rat(rng.random_range(-12..=12), rng.random_range(1..=7))
            }
            (None, &[s]) => bernoulli(s),
            (None, _) => int(0),
        }
    }

    /// `B_w`: the polynomial with `B_w(0) = b_w` and
    /// `B_w(z+1) - B_w(z) = s₁ z^{s₁-1} B_{tail}(z)`.
    pub fn poly(&self, w: &Word) -> ZPoly {
        self.cache.get_or_insert_with(w, || {
            let b = ZPoly::constant(self.constant(w));
            match w.first() {
                None | Some(0) => b,
                Some(s) => {
                    let rhs = ZPoly::monomial(int(s.into()), s as usize - 1);
                    let rhs = &rhs * &self.poly(&w.tail());
                    &solve_difference(&rhs) + &b
                }
            }
        })
    }
}

pub fn ext_bernoulli(w: &Word, fam: &ExtBernoulliFamily) -> ZPoly {
    fam.poly(w)
}

/// `β_w = B_w - B_w(0)`.
pub fn beta(w: &Word, fam: &ExtBernoulliFamily) -> ZPoly {
    let b = fam.poly(w);
    &b - &ZPoly::constant(b.coeff(0))
}

/// `b'_w` for the family's constants.
pub fn bprime(w: &Word, fam: &ExtBernoulliFamily) -> Rational {
    bprime_with(w, &|v| fam.constant(v))
}

/// `b'_{y_{n_1}…y_{n_r}} = b_{n_1…n_r} - Σ_{m<r} b_{n_{m+1}…n_r} b'_{n_1…n_m}`,
/// with `b'` of a single letter equal to `b` of it, for any assignment of
/// constants to the factors of `w`.
pub fn bprime_with(w: &Word, constant: &dyn Fn(&Word) -> Rational) -> Rational {
    let r = w.len();
    if r == 0 {
        return constant(w);
    }
    // prefix[m] = b' of the prefix of length m + 1
    let mut prefix: Vec<Rational> = Vec::with_capacity(r);
    for end in 1..=r {
        let mut acc = constant(&w.factor(0, end));
        for (m, bp) in prefix.iter().enumerate() {
            acc -= constant(&w.factor(m + 1, end)) * bp;
        }
        prefix.push(acc);
    }
    prefix.pop().unwrap_or_else(|| int(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::big;
    use crate::algebra::words_up_to_grade;
    use crate::special::binomial;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    /// Classical Bernoulli polynomial `Σ_k binom(n,k) b_k z^{n-k}`.
    fn classical_poly(n: u32) -> ZPoly {
        let mut c = vec![int(0); n as usize + 1];
        for k in 0..=n {
            c[(n - k) as usize] = big(binomial(n, k)) * bernoulli(k);
        }
        ZPoly::from_coeffs(c)
    }

    #[test]
    fn single_letters_are_classical() {
        let fam = ExtBernoulliFamily::classical();
        assert_eq!(fam.poly(&Word::empty()), ZPoly::one());
        for s in 0..10 {
            assert_eq!(
                ext_bernoulli(&Word::letter(s), &fam),
                classical_poly(s),
                "s = {s}"
            );
        }
        assert_eq!(fam.poly(&w("y1")), ZPoly::from_coeffs(vec![rat(-1, 2), int(1)]));
    }

    #[test]
    fn recurrence_holds_for_any_constants() {
        for fam in [ExtBernoulliFamily::classical(), ExtBernoulliFamily::random(7)] {
            for v in words_up_to_grade(7) {
                if v.is_empty() {
                    continue;
                }
                let b = fam.poly(&v);
                assert_eq!(b.coeff(0), fam.constant(&v));
                let s = v.first().unwrap();
                let lhs = &b.shift(&int(1)) - &b;
                let rhs = if s == 0 {
                    ZPoly::zero()
                } else {
                    &ZPoly::monomial(int(s.into()), s as usize - 1) * &fam.poly(&v.tail())
                };
                assert_eq!(lhs, rhs, "{v}");
            }
        }
    }

    #[test]
    fn beta_by_telescoping() {
        // β_w(N+1) = Σ_{k=0}^{N} s₁ k^{s₁-1} B_tail(k)
        let fam = ExtBernoulliFamily::random(3);
        for v in [w("y1"), w("y2.y1"), w("y3.y2"), w("y1.y1.y2")] {
            let s = v.first().unwrap() as i32;
            let tail = fam.poly(&v.tail());
            let bv = beta(&v, &fam);
            let mut acc = int(0);
            for n in 0..8i64 {
                let k = int(n);
                let pow = (1..s).fold(int(1), |a, _| a * &k);
                acc += int(s.into()) * pow * tail.eval(&k);
                assert_eq!(bv.eval(&int(n + 1)), acc, "{v} at N = {n}");
            }
        }
        // β_{y₁}(N+1) at N = 3 is 4.
        let fam = ExtBernoulliFamily::classical();
        assert_eq!(beta(&w("y1"), &fam).eval(&int(4)), int(4));
    }

    #[test]
    fn bprime_unrolls() {
        let fam = ExtBernoulliFamily::random(11);
        let (a, b) = (w("y2"), w("y5"));
        assert_eq!(bprime(&a, &fam), fam.constant(&a));
        let ab = a.concat(&b);
        assert_eq!(
            bprime(&ab, &fam),
            fam.constant(&ab) - fam.constant(&b) * bprime(&a, &fam)
        );
    }

    #[test]
    fn seeded_families_are_order_independent() {
        let f = ExtBernoulliFamily::random(99);
        let g = ExtBernoulliFamily::random(99);
        let words = words_up_to_grade(6);
        let forward: Vec<_> = words.iter().map(|v| f.constant(v)).collect();
        let backward: Vec<_> = words.iter().rev().map(|v| g.constant(v)).collect();
        assert!(forward.iter().eq(backward.iter().rev()));
        assert_ne!(
            (0..6).map(|s| f.constant(&Word::letter(s))).collect::<Vec<_>>(),
            (0..6)
                .map(|s| ExtBernoulliFamily::random(100).constant(&Word::letter(s)))
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn overrides_win() {
        let fam = ExtBernoulliFamily::classical().with_constant(w("y2.y1"), rat(5, 3));
        assert_eq!(fam.constant(&w("y2.y1")), rat(5, 3));
        assert_eq!(fam.poly(&w("y2.y1")).coeff(0), rat(5, 3));
        assert_eq!(fam.constant(&w("y1.y2")), int(0));
    }
}
