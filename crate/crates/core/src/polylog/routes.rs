//! Three independent computations of `Li⁻_w`.

use std::collections::BTreeMap;
use std::sync::LazyLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::LaurentU;
use crate::algebra::rational::big;
use crate::algebra::{NCPoly, Word};
use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::special::{binomial, factorial, stirling2};

static OP: LazyLock<Memo<Word, LaurentU>> = LazyLock::new(Memo::new);
static REC: LazyLock<Memo<Word, LaurentU>> = LazyLock::new(Memo::new);

/// `Li⁻_w` by operator calculus: `Li⁻_e = 1` and
/// `Li⁻_{y_s v} = θ₀^s(λ · Li⁻_v)`.
pub fn polylog_op(w: &Word) -> LaurentU {
    OP.get_or_insert_with(w, || match w.first() {
        None => LaurentU::one(),
        Some(s) => (0..s).fold(polylog_op(&w.tail()).lambda_mul(), |f, _| f.theta0()),
    })
}

/// `Li⁻_{y_n}` from second-kind Stirling numbers:
/// `Σ_{t=1}^{n+1} (t-1)! (-1)^{t+n+1} S₂(n+1, t) u^t`, and `u - 1` for `n = 0`.
fn letter_by_stirling(n: u32) -> LaurentU {
    if n == 0 {
        return LaurentU::from_ints(&[-1, 1]);
    }
    let mut f = LaurentU::zero();
    for t in 1..=n + 1 {
        let c = big(factorial(t - 1) * stirling2(n + 1, t));
        f.add_term(t as i64, if (t + n + 1).is_multiple_of(2) { c } else { -c });
    }
    f
}

/// `Li⁻_w` by the product recursion
/// `Li⁻_{y_{s₁}y_{s₂}v} = Σ_t binom(s₁, t) Li⁻_{y_t} Li⁻_{y_{s₁+s₂-t}v}`,
/// bottoming out in the Stirling form for single letters.
pub fn polylog_rec(w: &Word) -> LaurentU {
    REC.get_or_insert_with(w, || match w.indices() {
        [] => LaurentU::one(),
        &[n] => letter_by_stirling(n),
        &[s1, s2, ..] => {
            let rest = &w.indices()[2..];
            (0..=s1).fold(LaurentU::zero(), |acc, t| {
                let mut merged = vec![s1 + s2 - t];
                merged.extend_from_slice(rest);
                let term = &polylog_rec(&Word::letter(t)) * &polylog_rec(&Word::new(merged));
                &acc + &term.scale(&big(binomial(s1, t)))
            })
        }
    })
}

/// Linear extension of `Li⁻` to `ℚ⟨Y₀⟩`.
pub fn polylog_poly(p: &NCPoly) -> LaurentU {
    p.linear_map(LaurentU::zero(), |w, c, acc| &acc + &polylog_op(w).scale(c))
}

/// Every vector in `lo..=hi[i]` componentwise.
fn boxes(lo: u32, hi: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::with_capacity(hi.len())];
    for &h in hi {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (lo..=h).map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

/// The integers `l_{i,j}` with
/// `Li⁻_w = λ^{|w|} Σ_{i,j} l_{i,j} z^{i-1-j} (1-z)^{-i}` for `w ∈ Y⁺`.
///
/// For `k ∈ Π[1, s_n]` with `Σk = i` and `t ∈ Π_{m<r}[0, k_m]` with `Σt = j`,
/// each pair contributes `Π_n k_n! S₂(s_n, k_n)` times
/// `Π_{p=1}^{r-1} binom(k_r+…+k_{r-p+1} + p - t_{r-p+1}-…-t_{r-1}, t_{r-p})
///  · binom(k_{r-p} + t_{r-p+1}+…+t_{r-1}, k_{r-p} - t_{r-p})`.
pub fn lij_table(w: &Word) -> Result<BTreeMap<(usize, usize), BigInt>> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    if !w.is_positive() {
        return Err(Error::ZeroLetter(w.clone()));
    }
    let s = w.indices();
    let r = s.len();
    let mut table: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
    for k in boxes(1, s) {
        let weight: BigInt = k
            .iter()
            .zip(s)
            .map(|(&kn, &sn)| factorial(kn) * stirling2(sn, kn))
            .product();
        if weight.is_zero() {
            continue;
        }
        let i: u32 = k.iter().sum();
        for t in boxes(0, &k[..r - 1]) {
            let mut prod = BigInt::one();
            for p in 1..r {
                let a = r - p - 1;
                let k_tail: u32 = k[a + 1..].iter().sum();
                let t_tail: u32 = t[a + 1..].iter().sum();
                prod *= binomial(k_tail + p as u32 - t_tail, t[a]);
                prod *= binomial(k[a] + t_tail, k[a] - t[a]);
                if prod.is_zero() {
                    break;
                }
            }
            if prod.is_zero() {
                continue;
            }
            let j: u32 = t.iter().sum();
            *table.entry((i as usize, j as usize)).or_default() += &weight * prod;
        }
    }
    table.retain(|_, v| !v.is_zero());
    Ok(table)
}

/// `(u-1)^r Σ l_{i,j} (1 - u⁻¹)^{i-1-j} u^i`, i.e. the `l_{i,j}` expression
/// rewritten in `u`.
pub fn lij_assemble(r: usize, table: &BTreeMap<(usize, usize), BigInt>) -> LaurentU {
    let z = &LaurentU::one() - &LaurentU::monomial(big(1), -1);
    let lambda_r = LaurentU::from_ints(&[-1, 1]).pow(r as u32);
    let mut sum = LaurentU::zero();
    for (&(i, j), l) in table {
        let term = &z.pow((i - 1 - j) as u32) * &LaurentU::monomial(big(l.clone()), i as i64);
        sum = &sum + &term;
    }
    &lambda_r * &sum
}

/// `Li⁻_w` through the `l_{i,j}` closed form, for `w ∈ Y⁺`.
pub fn polylog_lij(w: &Word) -> Result<LaurentU> {
    Ok(lij_assemble(w.len(), &lij_table(w)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;
    use crate::algebra::words_up_to_grade;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn operator_route_examples() {
        assert_eq!(polylog_op(&w("y1")), LaurentU::from_ints(&[0, -1, 1]));
        assert_eq!(polylog_op(&w("y1.y1")), LaurentU::from_ints(&[0, -1, 5, -7, 3]));
        assert_eq!(
            polylog_op(&w("y2.y1")),
            LaurentU::from_ints(&[0, 1, -11, 31, -33, 12])
        );
        assert_eq!(polylog_op(&w("y0.y1")), LaurentU::from_ints(&[0, 1, -2, 1]));
        assert_eq!(polylog_op(&Word::empty()), LaurentU::one());
    }

    #[test]
    fn recursion_route_examples() {
        assert_eq!(polylog_rec(&w("y2")), LaurentU::from_ints(&[0, 1, -3, 2]));
        let y0 = polylog_rec(&w("y0"));
        let y1 = polylog_rec(&w("y1"));
        let y2 = polylog_rec(&w("y2"));
        assert_eq!(polylog_rec(&w("y1.y1")), &(&y0 * &y2) + &(&y1 * &y1));
        assert_eq!(polylog_rec(&Word::empty()), LaurentU::one());
    }

    #[test]
    fn lij_examples() {
        let t = lij_table(&w("y1")).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t[&(1, 0)], BigInt::from(1));
        assert_eq!(polylog_lij(&w("y1")).unwrap(), LaurentU::from_ints(&[0, -1, 1]));
        for n in 1..=4u32 {
            let t = lij_table(&Word::letter(n)).unwrap();
            for i in 1..=n {
                assert_eq!(t[&(i as usize, 0)], factorial(i) * stirling2(n, i));
            }
        }
        assert_eq!(
            polylog_lij(&w("y1.y1")).unwrap(),
            LaurentU::from_ints(&[0, -1, 5, -7, 3])
        );
        assert!(matches!(lij_table(&w("y1.y0")), Err(Error::ZeroLetter(_))));
    }

    #[test]
    fn letter_route_matches_stirling_expansion() {
        // θ₀^k λ = (1/(1-z)) Σ_j S₂(k,j) j! λ^j
        for k in 1..=6u32 {
            let lambda = LaurentU::from_ints(&[-1, 1]);
            let mut rhs = LaurentU::zero();
            for j in 1..=k {
                rhs = &rhs + &lambda.pow(j).scale(&big(stirling2(k, j) * factorial(j)));
            }
            assert_eq!(polylog_op(&Word::letter(k)), &LaurentU::u() * &rhs);
        }
    }

    #[test]
    fn routes_agree_exhaustively() {
        for v in words_up_to_grade(10) {
            let op = polylog_op(&v);
            assert_eq!(op, polylog_rec(&v), "{v}");
            if v.grade() <= 8 && !v.is_empty() && v.is_positive() {
                assert_eq!(op, polylog_lij(&v).unwrap(), "{v}");
            }
        }
    }

    #[test]
    fn shape_of_li() {
        for v in words_up_to_grade(9).into_iter().filter(|v| !v.is_empty()) {
            let f = polylog_op(&v);
            assert_eq!(f.max_power(), Some(v.grade() as i64), "{v}");
            assert!(f.terms().all(|(_, c)| c.is_integer()));
            assert!(f.leading_coeff().unwrap() > &int(0));
            if v.indices().iter().all(|&s| s == 0) {
                // Li⁻_{y₀^r} = (u - 1)^r keeps its constant term.
                assert_eq!(f, LaurentU::from_ints(&[-1, 1]).pow(v.len() as u32));
                continue;
            }
            assert_eq!(f.min_power(), Some(1), "{v}");
            if v.is_positive() {
                assert!(f.coeff(1) == int(1) || f.coeff(1) == int(-1), "{v}");
            }
            assert!(f.eval(&int(0)).is_zero());
        }
    }

    proptest! {
        #[test]
        fn y0_prefix_is_lambda(letters in prop::collection::vec(0u32..5, 0..4)) {
            let v = Word::new(letters);
            prop_assert_eq!(polylog_op(&v.prepend(0)), polylog_op(&v).lambda_mul());
        }

        #[test]
        fn linear_extension_is_linear(a in -5i64..5, b in -5i64..5) {
            let p = NCPoly::from_terms([(w("y1.y2"), int(a)), (w("y0"), int(b))]);
            let expected = &polylog_op(&w("y1.y2")).scale(&int(a)) + &polylog_op(&w("y0")).scale(&int(b));
            prop_assert_eq!(polylog_poly(&p), expected);
        }
    }
}
