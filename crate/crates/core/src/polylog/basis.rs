use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::{polylog_op, LaurentU};
use crate::algebra::rational::big;
use crate::algebra::{NCPoly, Rational, Word};
use crate::error::{Error, Result};
use crate::harmonic::hsum;
use crate::poly::NPoly;
use crate::special::{factorial, stirling1};

/// A combination `a·1 + Σ_s c_s y_s` of the empty word and single letters.
/// Zero letter coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LetterExpansion {
    pub constant: Rational,
    pub letters: BTreeMap<u32, Rational>,
}

impl LetterExpansion {
    pub fn letter(&self, s: u32) -> Rational {
        self.letters.get(&s).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.letters.is_empty()
    }

    pub fn to_ncpoly(&self) -> NCPoly {
        let mut p = NCPoly::term(Word::empty(), self.constant.clone());
        for (&s, c) in &self.letters {
            p.add_term(Word::letter(s), c.clone());
        }
        p
    }

    /// `a + Σ_s c_s Li⁻_{y_s}`.
    pub fn to_laurent(&self) -> LaurentU {
        let mut f = LaurentU::constant(self.constant.clone());
        for (&s, c) in &self.letters {
            f = &f + &polylog_op(&Word::letter(s)).scale(c);
        }
        f
    }

    fn push(&mut self, s: u32, c: Rational) {
        if !c.is_zero() {
            self.letters.insert(s, c);
        }
    }
}

impl fmt::Display for LetterExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_ncpoly(), f)
    }
}

/// `u^k` over `{u} ∪ {Li⁻_{y_j}}_{j≥1}`:
/// `u^k = u + Σ_{j=2}^{k} S₁(k,j)/(k-1)! · Li⁻_{y_{j-1}}`.
///
/// Entry 0 of the result is the coefficient of `u`; entry `j ≥ 1` is the
/// coefficient of `Li⁻_{y_j}`. Panics when `k = 0`.
pub fn u_power_in_li_basis(k: u32) -> Vec<Rational> {
    assert!(k >= 1, "u^0 is not in the span of u and the Li⁻_{{y_j}}");
    let denom = big(factorial(k - 1));
    let mut out = vec![big(1)];
    for j in 2..=k {
        out.push(big(stirling1(k, j)) / &denom);
    }
    out
}

/// Writes `f` over `{1} ∪ {Li⁻_{y_s}}_{s≥0}` by peeling the top power:
/// `Li⁻_{y_{d-1}}` has top term `(d-1)! u^d`. Fails on negative powers, which
/// no element of the span has.
pub fn li_basis_decompose(f: &LaurentU) -> Result<LetterExpansion> {
    if let Some(p) = f.min_power().filter(|&p| p < 0) {
        return Err(Error::OutsideLetterSpan { power: p });
    }
    let mut rest = f.clone();
    let mut out = LetterExpansion::default();
    while let Some(d) = rest.max_power().filter(|&d| d >= 1) {
        let s = (d - 1) as u32;
        let c = rest.coeff(d) / big(factorial(s));
        rest = &rest - &polylog_op(&Word::letter(s)).scale(&c);
        out.push(s, c);
    }
    out.constant = rest.coeff(0);
    Ok(out)
}

/// Writes `h` over `{1} ∪ {H⁻_{y_k}}_{k≥0}`; `H⁻_{y_{d-1}}` has degree `d` and
/// leading coefficient `1/d`.
pub fn hsum_letter_decompose(h: &NPoly) -> LetterExpansion {
    let mut rest = h.clone();
    let mut out = LetterExpansion::default();
    while let Some(d) = rest.degree().filter(|&d| d >= 1) {
        let s = (d - 1) as u32;
        let c = rest.coeff(d) * big(d);
        rest = &rest - &hsum(&Word::letter(s)).scale(&c);
        out.push(s, c);
    }
    out.constant = rest.coeff(0);
    out
}

/// `χ`: decompose `h` over `{1} ∪ {H⁻_{y_k}}`, send `H⁻_{y_k} ↦ Li⁻_{y_k}` and
/// expand in `u`. Satisfies `χ(H⁻_w) = Li⁻_w`.
pub fn chi(h: &NPoly) -> LaurentU {
    hsum_letter_decompose(h).to_laurent()
}
