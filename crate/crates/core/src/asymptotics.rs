//! The asymptotic characters `C⁻` and `B⁻`:
//! `H⁻_w(N) ~ C⁻_w N^{(w)+|w|}` as `N → ∞` and
//! `Li⁻_w(z) ~ B⁻_w (1-z)^{-((w)+|w|)}` as `z → 1`,
//! and their extension to `ℚ⟨Y₀⟩`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::rational::big;
use crate::algebra::{NCPoly, Rational, Word};
use crate::error::{Error, Result};
use crate::harmonic::{hsum, hsum_poly, power_as_hsums};
use crate::poly::{NPoly, TPoly};
use crate::polylog::{polylog_op, polylog_poly};
use crate::special::factorial;

/// `C⁻_w = Π_{w=uv, v≠1} ((v)+|v|)⁻¹`.
pub fn cminus(w: &Word) -> Rational {
    let denom: usize = w
        .suffixes()
        .filter(|v| !v.is_empty())
        .map(|v| v.grade())
        .product();
    Rational::new(1.into(), denom.into())
}

/// `B⁻_w = ((w)+|w|)! C⁻_w`, a positive integer.
pub fn bminus(w: &Word) -> Rational {
    big(factorial(w.grade() as u32)) * cminus(w)
}

/// `H⁻_P(N) ~ lead_h N^degree` and `Li⁻_P(z) ~ lead_li (1-z)^{-degree}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsymProfile {
    pub degree: usize,
    pub lead_h: Rational,
    pub lead_li: Rational,
}

/// Reads `n(P)`, `C⁻_P` and `B⁻_P` off the exact expansions of `H⁻_P` and `Li⁻_P`.
pub fn asym_profile(p: &NCPoly) -> Result<AsymProfile> {
    let h = hsum_poly(p);
    let degree = h.degree().ok_or(Error::InKernel)?;
    Ok(AsymProfile {
        degree,
        lead_h: h.coeff(degree),
        lead_li: polylog_poly(p).coeff(degree as i64),
    })
}

/// The step-down scan: at order `p`, words of grade `p` contribute their
/// character value and higher-grade words contribute their order-`p`
/// coefficient. The first nonzero order is `n(P)`.
fn step_down(
    p: &NCPoly,
    character: impl Fn(&Word) -> Rational,
    coeff_at: impl Fn(&Word, usize) -> Rational,
) -> Option<(usize, Rational)> {
    let top = p.max_grade()?;
    (0..=top).rev().find_map(|order| {
        let mut acc = Rational::zero();
        for (w, c) in p.terms() {
            match w.grade() {
                g if g == order => acc += c * character(w),
                g if g > order => acc += c * coeff_at(w, order),
                _ => {}
            }
        }
        (!acc.is_zero()).then_some((order, acc))
    })
}

/// [`asym_profile`] by scanning down from the top grade of the support, one
/// order at a time.
pub fn asym_profile_stepdown(p: &NCPoly) -> Result<AsymProfile> {
    let (degree, lead_h) = step_down(p, cminus, |w, k| hsum(w).coeff(k)).ok_or(Error::InKernel)?;
    let (li_degree, lead_li) =
        step_down(p, bminus, |w, k| polylog_op(w).coeff(k as i64)).ok_or(Error::InKernel)?;
    assert_eq!(degree, li_degree, "H⁻ and Li⁻ scans disagree on n(P) for {p}");
    Ok(AsymProfile {
        degree,
        lead_h,
        lead_li,
    })
}

/// `⟨Θ(t), w⟩ = t^{(w)+|w|}`.
pub fn theta_coeff(w: &Word) -> TPoly {
    TPoly::monomial(Rational::one(), w.grade())
}

/// `⟨Λ(t), w⟩ = ((w)+|w|)! t^{(w)+|w|}`.
pub fn lambda_coeff(w: &Word) -> TPoly {
    TPoly::monomial(big(factorial(w.grade() as u32)), w.grade())
}

/// `(Σ_y t^{(y)+1} y)*` restricted to words of grade at most `max_grade`,
/// expanded as `Σ_k S^k`.
pub fn kleene_star_truncated(max_grade: usize) -> BTreeMap<Word, TPoly> {
    let mut total: BTreeMap<Word, TPoly> = BTreeMap::from([(Word::empty(), TPoly::one())]);
    let mut power = total.clone();
    while !power.is_empty() {
        let mut next: BTreeMap<Word, TPoly> = BTreeMap::new();
        for (v, c) in &power {
            for s in 0..max_grade.saturating_sub(v.grade()) {
                let w = v.concat(&Word::letter(s as u32));
                let term = c * &TPoly::monomial(Rational::one(), s + 1);
                let slot = next.entry(w).or_default();
                *slot = &*slot + &term;
            }
        }
        for (w, c) in &next {
            let slot = total.entry(w.clone()).or_default();
            *slot = &*slot + c;
        }
        power = next;
    }
    total
}

/// `⟨(Σ_y t^{(y)+1} y)*, w⟩` by expanding the star.
pub fn kleene_star_coeff(w: &Word) -> TPoly {
    kleene_star_truncated(w.grade()).remove(w).unwrap_or_default()
}

/// `⟨Θ(N), w⟩ = Σ_{j<p} (-1)^{p+j-1} binom(p, j) H⁻_{y_j}(N)` with `p = (w)+|w|`.
pub fn theta_at_n(w: &Word) -> NPoly {
    if w.is_empty() {
        return NPoly::one();
    }
    hsum_poly(&power_as_hsums(w.grade() as u32))
}

/// Term-by-term Hadamard limits: the leading coefficient of `H⁻_w` is `C⁻_w`
/// and the top `u`-coefficient of `Li⁻_w` is `B⁻_w`.
pub fn hadamard_limit_check(w: &Word) -> bool {
    let g = w.grade();
    let h = hsum(w);
    h.degree() == Some(g) && h.coeff(g) == cminus(w) && polylog_op(w).coeff(g as i64) == bminus(w)
}

/// `C⁻` extended linearly to the homogeneous component of grade `n`.
pub fn cminus_graded(p: &NCPoly, n: usize) -> Result<Rational> {
    p.terms().try_fold(Rational::zero(), |acc, (w, c)| {
        if w.grade() != n {
            return Err(Error::MixedGrade {
                expected: n,
                found: w.grade(),
                word: w.clone(),
            });
        }
        Ok(acc + c * cminus(w))
    })
}
