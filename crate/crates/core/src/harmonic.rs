//! Harmonic sums at non-positive multi-indices,
//! `H⁻_{y_{s₁}…y_{s_r}}(N) = Σ_{N ≥ n₁ > … > n_r > 0} n₁^{s₁}…n_r^{s_r}`,
//! as exact polynomials in `N`.

use std::sync::LazyLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::rational::{big, int};
use crate::algebra::{NCPoly, Rational, Word};
use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::poly::{NPoly, Poly};
use crate::special::{binomial, bprime_with, ExtBernoulliFamily};

static HSUM: LazyLock<Memo<Word, NPoly>> = LazyLock::new(Memo::new);

/// The solution of `f(x+1) - f(x) = P(x)` with `f(0) = 0`.
///
/// Writes `P = Σ a_j binom(x, j)` with `a_j = Δ^j P(0)` and returns
/// `Σ a_j binom(x, j+1)`.
pub fn solve_difference<V>(p: &Poly<V>) -> Poly<V> {
    let Some(d) = p.degree() else {
        return Poly::zero();
    };
    let mut diffs: Vec<Rational> = (0..=d).map(|x| p.eval(&big(x))).collect();
    let mut out = Poly::zero();
    for j in 0..=d {
        if !diffs[0].is_zero() {
            out = &out + &Poly::binomial(j + 1).scale(&diffs[0]);
        }
        for i in 0..diffs.len() - 1 {
            diffs[i] = &diffs[i + 1] - &diffs[i];
        }
        diffs.pop();
    }
    out
}

/// `H⁻_w` as a polynomial in `N`, built from the right:
/// `H⁻_{y_s v}(N+1) - H⁻_{y_s v}(N) = (N+1)^s H⁻_v(N)` with value 0 at `N = 0`.
pub fn hsum(w: &Word) -> NPoly {
    HSUM.get_or_insert_with(w, || match w.first() {
        None => NPoly::one(),
        Some(s) => {
            let rhs = &NPoly::x_plus(int(1)).pow(s) * &hsum(&w.tail());
            solve_difference(&rhs)
        }
    })
}

/// The nested sum evaluated directly, innermost index first.
pub fn hsum_brute(w: &Word, n: u32) -> Rational {
    let n = n as usize;
    // inner[m] = H⁻_v(m) for the current suffix v
    let mut inner: Vec<BigInt> = vec![BigInt::one(); n + 1];
    for &s in w.indices().iter().rev() {
        let mut outer = vec![BigInt::zero(); n + 1];
        for m in 1..=n {
            outer[m] = &outer[m - 1] + BigInt::from(m).pow(s) * &inner[m - 1];
        }
        inner = outer;
    }
    big(inner.swap_remove(n))
}

/// Linear extension of `H⁻` to `ℚ⟨Y₀⟩`.
pub fn hsum_poly(p: &NCPoly) -> NPoly {
    p.linear_map(NPoly::zero(), |w, c, acc| &acc + &hsum(w).scale(c))
}

/// `G⁻_w` with `H⁻_w(N) = (N+1)N(N-1)…(N-|w|+1) G⁻_w(N)`, for non-empty
/// `w` without the letter `y₀`.
///
/// Panics if one of the divisions leaves a remainder; that would mean `hsum`
/// is wrong.
pub fn gfactor(w: &Word) -> Result<NPoly> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    if !w.is_positive() {
        return Err(Error::ZeroLetter(w.clone()));
    }
    let mut h = hsum(w);
    for root in -1..w.len() as i64 {
        let (q, r) = h.div_linear(&int(root));
        assert!(r.is_zero(), "H⁻_{w} does not vanish at N = {root}");
        h = q;
    }
    Ok(h)
}

/// `N^k = Σ_{j<k} (-1)^{j+k-1} binom(k, j) H⁻_{y_j}(N)`, as an element of `ℚ⟨Y₀⟩`.
pub fn power_as_hsums(k: u32) -> NCPoly {
    (0..k)
        .map(|j| {
            let c = big(binomial(k, j));
            (
                Word::letter(j),
                if (j + k - 1).is_multiple_of(2) { c } else { -c },
            )
        })
        .collect()
}

/// `H⁻_w` from extended Bernoulli polynomials, with `m_i = n_i + 1`:
///
/// `H⁻_w(N) = [β̃_m(N+1) - Σ_{k<r} b̃'_{m_{k+1}…m_r} β̃_{m_1…m_k}(N+1)] / Π m_i`
///
/// where every constant is anchored at 1: `β̃_v(z) = B_v(z) - B_v(1)` and `b̃'`
/// is built from `B_v(1)`. The anchor at 0 gives the wrong answer whenever a
/// factor starts with `y₁`, because then `B_v(1) ≠ B_v(0)`.
pub fn hsum_via_beta(w: &Word, fam: &ExtBernoulliFamily) -> NPoly {
    let r = w.len();
    if r == 0 {
        return NPoly::one();
    }
    let m = w.shifted(1);
    let one = int(1);
    let anchor = |v: &Word| fam.poly(v).eval(&one);
    let beta_shifted = |v: &Word| -> NPoly {
        let b = fam.poly(v).shift(&one);
        (&b - &Poly::constant(anchor(v))).retag()
    };
    let mut num = beta_shifted(&m);
    for k in 1..r {
        let c = bprime_with(&m.factor(k, r), &anchor);
        num = &num - &beta_shifted(&m.factor(0, k)).scale(&c);
    }
    let denom: Rational = m.indices().iter().map(|&s| big(s)).product();
    num.scale(&denom.recip())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;
    use crate::algebra::{stuffle, words_up_to_grade};
    use crate::special::build_m;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn n_poly(coeffs: &[(i64, i64)]) -> NPoly {
        NPoly::from_coeffs(coeffs.iter().map(|&(a, b)| rat(a, b)).collect())
    }

    /// `N` as a polynomial.
    fn x() -> NPoly {
        NPoly::x()
    }

    fn lin(a: i64, b: i64) -> NPoly {
        NPoly::from_ints(&[b, a])
    }

    #[test]
    fn difference_solver() {
        assert_eq!(solve_difference(&NPoly::one()), x());
        assert_eq!(solve_difference(&x()), n_poly(&[(0, 1), (-1, 2), (1, 2)]));
        let f = solve_difference(&lin(1, 1));
        assert_eq!(f, n_poly(&[(0, 1), (1, 2), (1, 2)]));
        assert!(solve_difference(&NPoly::zero()).is_zero());
    }

    #[test]
    fn difference_solver_leading_term() {
        for d in 0..8 {
            let p = NPoly::from_ints(&[3, -1, 2, 5, 7, 1, 4, 2][..=d]);
            let f = solve_difference(&p);
            assert_eq!(&f.shift(&int(1)) - &f, p);
            assert!(f.coeff(0).is_zero());
            assert_eq!(
                f.leading_coeff().unwrap(),
                &(p.leading_coeff().unwrap() / big(d + 1))
            );
        }
    }

    #[test]
    fn paper_examples() {
        assert_eq!(
            hsum(&w("y2")),
            (&(&x() * &lin(1, 1)) * &lin(2, 1)).scale(&rat(1, 6))
        );
        assert_eq!(hsum(&w("y0.y0")), (&x() * &lin(1, -1)).scale(&rat(1, 2)));
        let y2y1 = &(&(&x() * &lin(1, -1)) * &lin(1, 1)) * &NPoly::from_ints(&[2, 15, 12]);
        assert_eq!(hsum(&w("y2.y1")), y2y1.scale(&rat(1, 120)));
        assert_eq!(hsum(&Word::empty()), NPoly::one());
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(hsum_brute(&w("y1"), 3), int(6));
        assert_eq!(hsum_brute(&w("y1.y1"), 3), int(11));
        for r in 0..5u32 {
            let w0 = Word::new(vec![0; r as usize]);
            for n in 0..10 {
                assert_eq!(hsum_brute(&w0, n), big(binomial(n, r)));
            }
        }
    }

    #[test]
    fn linear_extension() {
        assert_eq!(hsum_poly(&"y0".parse().unwrap()), x());
        let h1 = hsum(&w("y1"));
        assert_eq!(hsum_poly(&"2*y1.y1 + y2".parse().unwrap()), &h1 * &h1);
        assert!(hsum_poly(&NCPoly::zero()).is_zero());
    }

    #[test]
    fn g_factor() {
        assert_eq!(gfactor(&w("y1")).unwrap(), NPoly::constant(rat(1, 2)));
        assert_eq!(gfactor(&w("y1.y1")).unwrap(), n_poly(&[(2, 24), (3, 24)]));
        assert_eq!(gfactor(&w("y2")).unwrap(), n_poly(&[(1, 6), (2, 6)]));
        assert!(matches!(gfactor(&w("y0.y1")), Err(Error::ZeroLetter(_))));
        assert!(matches!(gfactor(&Word::empty()), Err(Error::EmptyWord)));
        for v in words_up_to_grade(9)
            .into_iter()
            .filter(|v| !v.is_empty() && v.is_positive())
        {
            assert_eq!(gfactor(&v).unwrap().degree(), Some(v.weight() - 1), "{v}");
        }
    }

    #[test]
    fn powers_in_the_letter_basis() {
        assert_eq!(power_as_hsums(1), "y0".parse().unwrap());
        assert_eq!(power_as_hsums(2), "-y0 + 2*y1".parse().unwrap());
        assert_eq!(power_as_hsums(3), "y0 - 3*y1 + 3*y2".parse().unwrap());
        for k in 1..=10 {
            assert_eq!(hsum_poly(&power_as_hsums(k)), NPoly::monomial(int(1), k as usize));
        }
    }

    #[test]
    fn beta_route_examples() {
        let fam = ExtBernoulliFamily::classical();
        assert_eq!(hsum_via_beta(&w("y0"), &fam), x());
        assert_eq!(hsum_via_beta(&w("y1"), &fam), hsum(&w("y1")));
        let target = &(&(&x() * &lin(1, -1)) * &lin(1, 1)) * &NPoly::from_ints(&[-2, 5, 8]);
        for seed in 0..5 {
            let fam = ExtBernoulliFamily::random(seed);
            assert_eq!(hsum_via_beta(&w("y1.y2"), &fam), target.scale(&rat(1, 120)));
        }
    }

    #[test]
    fn exhaustive_degree_and_brute_force() {
        for v in words_up_to_grade(10) {
            let h = hsum(&v);
            assert_eq!(h.degree(), Some(v.grade()), "{v}");
            for n in 0..=12 {
                assert_eq!(h.eval(&big(n)), hsum_brute(&v, n), "{v} at {n}");
            }
        }
    }

    #[test]
    fn faulhaber_rows() {
        let m = build_m(8);
        for i in 0..=8 {
            let mut coeffs = vec![int(0)];
            coeffs.extend_from_slice(m.row(i));
            assert_eq!(hsum(&Word::letter(i as u32)), NPoly::from_coeffs(coeffs), "y{i}");
        }
    }

    fn arb_word(max_len: usize, max_index: u32) -> impl Strategy<Value = Word> {
        prop::collection::vec(0..=max_index, 0..=max_len).prop_map(Word::new)
    }

    proptest! {
        #[test]
        fn stuffle_morphism(u in arb_word(3, 3), v in arb_word(3, 3)) {
            let lhs = &hsum(&u) * &hsum(&v);
            let rhs = hsum_poly(&stuffle(&u, &v));
            prop_assert!(!rhs.is_zero());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn vanishes_below_length(v in arb_word(4, 4)) {
            prop_assume!(!v.is_empty() && v.is_positive());
            let h = hsum(&v);
            for root in -1..v.len() as i64 {
                prop_assert!(h.eval(&int(root)).is_zero());
            }
        }

        #[test]
        fn beta_route_any_constants(v in arb_word(3, 3), seed in any::<u64>()) {
            let fam = ExtBernoulliFamily::random(seed);
            prop_assert_eq!(hsum_via_beta(&v, &fam), hsum(&v));
        }

        #[test]
        fn brute_force_agreement(v in arb_word(4, 4), n in 0u32..15) {
            prop_assert_eq!(hsum(&v).eval(&big(n)), hsum_brute(&v, n));
        }
    }
}
