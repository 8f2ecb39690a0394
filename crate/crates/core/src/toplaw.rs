//! The product `⊤` on `ℚ⟨Y₀⟩`: `u ⊤ v` is the unique element of
//! `span{1, y₀, y₁, …}` whose `Li⁻` image is `Li⁻_u · Li⁻_v`.

use std::sync::LazyLock;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::rational::big;
use crate::algebra::{shuffle, stuffle, Law, NCPoly, Rational, Word};
use crate::memo::Memo;
use crate::polylog::{li_basis_decompose, polylog_op, polylog_poly, LetterExpansion};
use crate::special::{binomial, eulerian_number, factorial, stirling1};

/// `a₁(u,v)·1 + Σ_s a_s(u,v) y_s`.
pub type TopResult = LetterExpansion;

static TOP: LazyLock<Memo<(Word, Word), TopResult>> = LazyLock::new(Memo::new);

fn letter_span(f: &crate::LaurentU) -> TopResult {
    li_basis_decompose(f).expect("Li⁻ images have no negative powers of u")
}

/// `u ⊤ v`.
pub fn top(u: &Word, v: &Word) -> TopResult {
    let key = if u <= v {
        (u.clone(), v.clone())
    } else {
        (v.clone(), u.clone())
    };
    TOP.get_or_insert_with(&key, || letter_span(&(&polylog_op(u) * &polylog_op(v))))
}

/// Bilinear extension of `⊤`.
pub fn top_poly(p: &NCPoly, q: &NCPoly) -> NCPoly {
    p.bilinear(q, |u, v| top(u, v).to_ncpoly())
}

/// Bilinear extension of any of the three word-level products.
pub fn ncp_product(law: Law, p: &NCPoly, q: &NCPoly) -> NCPoly {
    match law {
        Law::Shuffle => p.bilinear(q, shuffle),
        Law::Stuffle => p.bilinear(q, stuffle),
        Law::Top => top_poly(p, q),
    }
}

/// `w ⊤ 1`: `Li⁻_w` written over `{1} ∪ {Li⁻_{y_s}}`.
pub fn letter_normal_form(w: &Word) -> TopResult {
    letter_span(&polylog_op(w))
}

/// `w ⊤ 1` by `w ⊤ 1 = Σ_{i=0}^{s₁} binom(s₁, i) y_i ⊤ y_{s₁+s₂-i}y_{s₃}…y_{s_r}`,
/// recursing on the second factor.
pub fn letter_normal_form_recursive(w: &Word) -> TopResult {
    let s = w.indices();
    if s.len() <= 1 {
        return letter_span(&polylog_op(w));
    }
    let mut acc = NCPoly::zero();
    for i in 0..=s[0] {
        let mut merged = vec![s[0] + s[1] - i];
        merged.extend_from_slice(&s[2..]);
        let rest = letter_normal_form_recursive(&Word::new(merged)).to_ncpoly();
        let term = top_poly(&NCPoly::from_word(Word::letter(i)), &rest);
        acc = &acc + &term.scale(&big(binomial(s[0], i)));
    }
    from_letter_poly(&acc)
}

fn from_letter_poly(p: &NCPoly) -> TopResult {
    let mut out = TopResult::default();
    for (w, c) in p.terms() {
        match w.indices() {
            [] => out.constant = c.clone(),
            &[s] => {
                out.letters.insert(s, c.clone());
            }
            _ => unreachable!("⊤ produced the word {w} outside the letter span"),
        }
    }
    out
}

/// `w - w ⊤ 1`; these span the kernel.
pub fn kernel_generator(w: &Word) -> NCPoly {
    &NCPoly::from_word(w.clone()) - &letter_normal_form(w).to_ncpoly()
}

/// Whether `Li⁻_P`, equivalently `H⁻_P`, is the zero function.
pub fn kernel_member(p: &NCPoly) -> bool {
    polylog_poly(p).is_zero()
}

/// `A_{m,n,k} = Σ_{t=0}^{k} A_{n,t} A_{m,k-t}`; zero for negative `k`.
pub fn a_mnk(m: u32, n: u32, k: i64) -> BigInt {
    (0..=k)
        .map(|t| eulerian_number(n, t) * eulerian_number(m, k - t))
        .sum()
}

/// `γ_{m,n,k}`, the coefficient of `u^k` in `Li⁻_{y_m} Li⁻_{y_n}`.
pub fn gamma_mnk(m: u32, n: u32, k: i64) -> Rational {
    (&polylog_op(&Word::letter(m)) * &polylog_op(&Word::letter(n))).coeff(k)
}

/// `Σ_{j=m+n-k}^{m+n-2} A_{m,n,j} binom(j+2, m+n+2-k) (-1)^{m+n-k}`, for
/// `m, n ≥ 1` and `2 ≤ k ≤ m+n+2`.
pub fn gamma_closed_form(m: u32, n: u32, k: i64) -> Rational {
    let mn = (m + n) as i64;
    let mut acc = BigInt::zero();
    for j in (mn - k).max(0)..=mn - 2 {
        acc += a_mnk(m, n, j) * binomial((j + 2) as u32, (mn + 2 - k) as u32);
    }
    if (mn - k).rem_euclid(2) == 1 {
        acc = -acc;
    }
    big(acc)
}

/// `y_m ⊤ y_n = Σ_{k=2}^{m+n+2} γ_{m,n,k} (1 + y₀ + Σ_{j=2}^{k} S₁(k,j)/(k-1)! y_{j-1})`,
/// the letter-basis expansion of `u^k` applied to the `γ` coefficients.
pub fn top_from_gamma(m: u32, n: u32, gamma: impl Fn(u32, u32, i64) -> Rational) -> NCPoly {
    let mut acc = NCPoly::zero();
    for k in 2..=(m + n + 2) {
        let g = gamma(m, n, k as i64);
        if g.is_zero() {
            continue;
        }
        acc.add_term(Word::empty(), g.clone());
        acc.add_term(Word::letter(0), g.clone());
        let denom = big(factorial(k - 1));
        for j in 2..=k {
            acc.add_term(Word::letter(j - 1), &g * big(stirling1(k, j)) / &denom);
        }
    }
    acc
}
