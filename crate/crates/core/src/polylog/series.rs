use num_traits::Zero;

use super::{polylog_op, LaurentU};
use crate::algebra::rational::{big, int};
use crate::algebra::{Rational, Word};
use crate::harmonic::hsum_brute;
use crate::poly::ZPoly;
use crate::special::{binomial, ext_eulerian};

/// Checks `Li⁻_w · (1-z)^{(w)+|w|} = z^{|w|} A⁻_w(z)` as polynomials in `z`.
/// The left side is `Σ_k n_k (1-z)^{(w)+|w|-k}` read off the `u`-coefficients.
pub fn eulerian_form_check(w: &Word) -> bool {
    let g = w.grade() as i64;
    let f = polylog_op(w);
    if f.min_power().is_some_and(|p| p < 0) || f.max_power().is_some_and(|p| p > g) {
        return false;
    }
    let one_minus_z = ZPoly::from_ints(&[1, -1]);
    let lhs = f.terms().fold(ZPoly::zero(), |acc, (k, c)| {
        &acc + &one_minus_z.pow((g - k) as u32).scale(c)
    });
    let rhs = &ZPoly::monomial(int(1), w.len()) * &ext_eulerian(w);
    lhs == rhs
}

/// The first `order + 1` Taylor coefficients in `z` of `f(u)`, `u = (1-z)⁻¹`.
pub fn taylor_coeffs(f: &LaurentU, order: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); order + 1];
    for (k, c) in f.terms() {
        for (n, slot) in out.iter_mut().enumerate() {
            let n32 = n as u32;
            let coeff = match k {
                0 => big(u32::from(n == 0)),
                k if k > 0 => big(binomial(n32 + k as u32 - 1, n32)),
                k => {
                    let m = (-k) as u32;
                    let b = big(binomial(m, n32));
                    if n % 2 == 0 {
                        b
                    } else {
                        -b
                    }
                }
            };
            *slot += c * coeff;
        }
    }
    out
}

/// `Σ_{n₁>…>n_r>0} n₁^{s₁}…n_r^{s_r} z^{n₁}` up to `z^order`, by direct
/// summation: the coefficient of `z^n` is `n^{s₁} H⁻_{tail}(n-1)`.
pub fn li_series_brute(w: &Word, order: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); order + 1];
    match w.first() {
        None => out[0] = int(1),
        Some(s) => {
            let tail = w.tail();
            for (n, slot) in out.iter_mut().enumerate().skip(1) {
                let mut p = int(1);
                for _ in 0..s {
                    p *= big(n);
                }
                *slot = p * hsum_brute(&tail, n as u32 - 1);
            }
        }
    }
    out
}
