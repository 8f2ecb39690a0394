//! Dense univariate polynomials with exact rational coefficients.
//!
//! The variable is tracked at the type level so that a polynomial in the
//! harmonic-sum bound `N` cannot be mixed up with one in `z`.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::marker::PhantomData;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::algebra::{rational, Rational};

/// Marker for the formal variable of a [`Poly`].
pub trait Variable {
    const SYMBOL: &'static str;
}

/// The upper summation bound `N` of a harmonic sum.
pub enum VarN {}
/// The polylogarithm argument `z`.
pub enum VarZ {}
/// The grading variable `t` of the series `Θ(t)` and `Λ(t)`.
pub enum VarT {}

impl Variable for VarN {
    const SYMBOL: &'static str = "N";
}
impl Variable for VarZ {
    const SYMBOL: &'static str = "z";
}
impl Variable for VarT {
    const SYMBOL: &'static str = "t";
}

/// Ascending coefficients; trailing zeros are always trimmed, so the zero
/// polynomial has no coefficients at all.
pub struct Poly<V> {
    coeffs: Vec<Rational>,
    _var: PhantomData<fn() -> V>,
}

/// Polynomial in `N`; values of `H⁻` live here.
pub type NPoly = Poly<VarN>;
/// Polynomial in `z`; Eulerian and extended Bernoulli polynomials live here.
pub type ZPoly = Poly<VarZ>;
/// Polynomial in `t`; coefficients of `Θ` and `Λ` live here.
pub type TPoly = Poly<VarT>;

impl<V> Clone for Poly<V> {
    fn clone(&self) -> Self {
        Self::from_coeffs(self.coeffs.clone())
    }
}

impl<V> PartialEq for Poly<V> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}
impl<V> Eq for Poly<V> {}

impl<V> Hash for Poly<V> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl<V> Default for Poly<V> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<V> Poly<V> {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self {
            coeffs,
            _var: PhantomData,
        }
    }

    /// Convenience constructor from integer coefficients (ascending).
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rational::int(c)).collect())
    }

    pub fn zero() -> Self {
        Self::from_coeffs(Vec::new())
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: Rational, power: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = c;
        Self::from_coeffs(coeffs)
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `x + a`
    pub fn x_plus(a: Rational) -> Self {
        Self::from_coeffs(vec![a, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> Rational {
        self.coeffs.get(power).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// `p(x + a)`, by Horner's scheme on `x + a`.
    pub fn shift(&self, a: &Rational) -> Self {
        let step = Self::x_plus(a.clone());
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * &step) + &Self::constant(c.clone())
        })
    }

    /// Divides by `(x - root)`; returns quotient and remainder.
    pub fn div_linear(&self, root: &Rational) -> (Self, Rational) {
        if self.coeffs.is_empty() {
            return (Self::zero(), Rational::zero());
        }
        let n = self.coeffs.len();
        let mut quotient = vec![Rational::zero(); n - 1];
        let mut carry = Rational::zero();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            carry = carry * root + c;
            if i > 0 {
                quotient[i - 1] = carry.clone();
            }
        }
        (Self::from_coeffs(quotient), carry)
    }

    /// The same coefficients read in another variable.
    pub fn retag<W>(self) -> Poly<W> {
        Poly::from_coeffs(self.coeffs)
    }

    /// The binomial polynomial `x(x-1)…(x-k+1)/k!`.
    pub fn binomial(k: usize) -> Self {
        let mut p = Self::one();
        for i in 0..k {
            p = &p * &Self::x_plus(-rational::int(i as i64));
        }
        p.scale(&Rational::from_integer(crate::special::factorial(k as u32)).recip())
    }
}

impl<V: Variable> Poly<V> {
    pub fn symbol() -> &'static str {
        V::SYMBOL
    }
}

impl<V> Add<&Poly<V>> for &Poly<V> {
    type Output = Poly<V>;
    fn add(self, rhs: &Poly<V>) -> Poly<V> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs(
            (0..n)
                .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                    (Some(a), Some(b)) => a + b,
                    (Some(a), None) | (None, Some(a)) => a.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }
}

impl<V> Sub<&Poly<V>> for &Poly<V> {
    type Output = Poly<V>;
    fn sub(self, rhs: &Poly<V>) -> Poly<V> {
        self + &(-rhs)
    }
}

impl<V> Neg for &Poly<V> {
    type Output = Poly<V>;
    fn neg(self) -> Poly<V> {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl<V> Mul<&Poly<V>> for &Poly<V> {
    type Output = Poly<V>;
    fn mul(self, rhs: &Poly<V>) -> Poly<V> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl<V> $tr<Poly<V>> for Poly<V> {
            type Output = Poly<V>;
            fn $m(self, rhs: Poly<V>) -> Poly<V> {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl<V> Neg for Poly<V> {
    type Output = Poly<V>;
    fn neg(self) -> Poly<V> {
        -&self
    }
}

impl<V: Variable> fmt::Debug for Poly<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Descending powers, e.g. `1/2*N^2 + 1/2*N`; the zero polynomial prints as `0`.
impl<V: Variable> fmt::Display for Poly<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let mono = match k {
                    0 => String::new(),
                    1 => V::SYMBOL.to_string(),
                    _ => format!("{}^{k}", V::SYMBOL),
                };
                (c.clone(), mono)
            });
        rational::write_terms(f, terms)
    }
}
