use std::sync::LazyLock;

use num_bigint::BigInt;
use num_traits::Zero;

use super::numbers::binomial;
use crate::algebra::rational::big;
use crate::algebra::Word;
use crate::memo::Memo;
use crate::poly::ZPoly;

static EXT_EULERIAN: LazyLock<Memo<Word, ZPoly>> = LazyLock::new(Memo::new);

/// `A_{n,k} = Σ_{j=0}^{k} (-1)^j binom(n+1, j) (k+1-j)^n`; zero outside
/// `0 ≤ k ≤ n-1` (and `A_{0,0} = 1`).
pub fn eulerian_number(n: u32, k: i64) -> BigInt {
    let top = if n == 0 { 0 } else { n as i64 - 1 };
    if k < 0 || k > top {
        return BigInt::zero();
    }
    let k = k as u32;
    (0..=k)
        .map(|j| {
            let term = binomial(n + 1, j) * BigInt::from(k + 1 - j).pow(n);
            if j % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// `A_n(z) = Σ_k A_{n,k} z^k`, with `A_0(z) = 1`.
pub fn eulerian_poly(n: u32) -> ZPoly {
    let top = if n == 0 { 0 } else { n - 1 };
    ZPoly::from_coeffs((0..=top as i64).map(|k| big(eulerian_number(n, k))).collect())
}

/// Extended Eulerian polynomial `A⁻_w`: `A⁻_{y_n} = A_n`, `A⁻_e = 1`, and
/// `A⁻_{y_{s₁}y_{s₂}…} = Σ_i binom(s₁, i) A_i · A⁻_{y_{s₁+s₂-i}y_{s₃}…}`.
pub fn ext_eulerian(w: &Word) -> ZPoly {
    EXT_EULERIAN.get_or_insert_with(w, || match w.indices() {
        [] => ZPoly::one(),
        &[s] => eulerian_poly(s),
        &[s1, s2, ..] => {
            let rest = &w.indices()[2..];
            (0..=s1).fold(ZPoly::zero(), |acc, i| {
                let mut merged = vec![s1 + s2 - i];
                merged.extend_from_slice(rest);
                let term = &eulerian_poly(i) * &ext_eulerian(&Word::new(merged));
                &acc + &term.scale(&big(binomial(s1, i)))
            })
        }
    })
}

/// `Σ_k A_{n,k} = n!`, exposed for the verification suites.
pub fn eulerian_row_sum(n: u32) -> BigInt {
    let top = if n == 0 { 0 } else { n as i64 - 1 };
    (0..=top).map(|k| eulerian_number(n, k)).sum()
}
