use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::algebra::rational::{self, big, int};
use crate::algebra::Rational;

/// A Laurent polynomial in `u = (1 - z)⁻¹`. Under `z = 1 - u⁻¹` the ring
/// `ℚ[z, (1-z)⁻¹]` is exactly `ℚ[u, u⁻¹]`, so no rational-function
/// normalisation is ever needed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentU {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentU {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rational, power: i64) -> Self {
        let mut f = Self::zero();
        f.add_term(power, c);
        f
    }

    /// The variable `u`.
    pub fn u() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// Integer coefficients of `u⁰, u¹, …`.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        let mut f = Self::zero();
        for (p, &c) in coeffs.iter().enumerate() {
            f.add_term(p as i64, int(c));
        }
        f
    }

    pub fn add_term(&mut self, power: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(power) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn coeff(&self, power: i64) -> Rational {
        self.terms.get(&power).cloned().unwrap_or_else(Rational::zero)
    }

    /// `(power, coefficient)` in ascending powers.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rational)> + ExactSizeIterator {
        self.terms.iter().map(|(&p, c)| (p, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_power(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_power(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&p, a)| (p, a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Evaluates at `u = x`. Panics on `x = 0` when negative powers are present.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.terms
            .iter()
            .map(|(&p, c)| {
                let base = if p < 0 { x.recip() } else { x.clone() };
                let mut acc = c.clone();
                for _ in 0..p.unsigned_abs() {
                    acc *= &base;
                }
                acc
            })
            .sum()
    }

    /// `θ₀ = z d/dz`, which is `(u² - u) d/du` in the variable `u`.
    pub fn theta0(&self) -> Self {
        let mut out = Self::zero();
        for (&p, c) in &self.terms {
            let pc = c * big(p);
            out.add_term(p + 1, pc.clone());
            out.add_term(p, -pc);
        }
        out
    }

    /// Multiplication by `λ = z/(1-z) = u - 1`.
    pub fn lambda_mul(&self) -> Self {
        let mut out = Self::zero();
        for (&p, c) in &self.terms {
            out.add_term(p + 1, c.clone());
            out.add_term(p, -c);
        }
        out
    }
}

impl Add<&LaurentU> for &LaurentU {
    type Output = LaurentU;
    fn add(self, rhs: &LaurentU) -> LaurentU {
        let mut out = self.clone();
        for (&p, c) in &rhs.terms {
            out.add_term(p, c.clone());
        }
        out
    }
}

impl Sub<&LaurentU> for &LaurentU {
    type Output = LaurentU;
    fn sub(self, rhs: &LaurentU) -> LaurentU {
        let mut out = self.clone();
        for (&p, c) in &rhs.terms {
            out.add_term(p, -c);
        }
        out
    }
}

impl Neg for &LaurentU {
    type Output = LaurentU;
    fn neg(self) -> LaurentU {
        self.scale(&-Rational::one())
    }
}

impl Mul<&LaurentU> for &LaurentU {
    type Output = LaurentU;
    fn mul(self, rhs: &LaurentU) -> LaurentU {
        let mut out = LaurentU::zero();
        for (&p, a) in &self.terms {
            for (&q, b) in &rhs.terms {
                out.add_term(p + q, a * b);
            }
        }
        out
    }
}

impl fmt::Debug for LaurentU {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentU({self})")
    }
}

/// Descending powers, e.g. `3*u^4 - 7*u^3 + 5*u^2 - u`.
impl fmt::Display for LaurentU {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms.iter().rev().map(|(&p, c)| {
            let mono = match p {
                0 => String::new(),
                1 => "u".to_string(),
                _ => format!("u^{p}"),
            };
            (c.clone(), mono)
        });
        rational::write_terms(f, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lambda() -> LaurentU {
        LaurentU::from_ints(&[-1, 1])
    }

    #[test]
    fn theta_examples() {
        assert!(LaurentU::one().theta0().is_zero());
        assert_eq!(lambda().theta0(), LaurentU::from_ints(&[0, -1, 1]));
        assert_eq!(lambda().theta0().theta0(), LaurentU::from_ints(&[0, 1, -3, 2]));
    }

    #[test]
    fn theta_is_z_derivative() {
        // On u^k, z d/dz (1-z)^{-k} = k z (1-z)^{-k-1} = k (u - 1) u^k.
        for k in -3..6 {
            let f = LaurentU::monomial(int(1), k);
            let expected = (&f * &lambda()).scale(&int(k));
            assert_eq!(f.theta0(), expected);
        }
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(LaurentU::one().lambda_mul(), lambda());
        assert_eq!(LaurentU::u().lambda_mul(), LaurentU::from_ints(&[0, -1, 1]));
        assert_eq!(
            LaurentU::from_ints(&[0, -1, 1]).lambda_mul(),
            LaurentU::from_ints(&[0, 1, -2, 1])
        );
    }

    #[test]
    fn arithmetic_and_display() {
        let f = LaurentU::from_ints(&[0, -1, 5, -7, 3]);
        assert_eq!(f.to_string(), "3*u^4 - 7*u^3 + 5*u^2 - u");
        assert_eq!(f.max_power(), Some(4));
        assert_eq!(f.min_power(), Some(1));
        assert!((&f - &f).is_zero());
        assert_eq!(LaurentU::zero().to_string(), "0");
        let inv = LaurentU::monomial(int(2), -1);
        assert_eq!(inv.to_string(), "2*u^-1");
        assert_eq!((&inv * &LaurentU::u()), LaurentU::constant(int(2)));
        assert_eq!(f.eval(&int(0)), int(0));
        assert_eq!(lambda().pow(2), LaurentU::from_ints(&[1, -2, 1]));
    }
}
