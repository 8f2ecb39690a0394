use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_traits::{One, Zero};

use super::bernoulli::{bprime_with, ExtBernoulliFamily};
use super::numbers::{bernoulli, factorial, stirling1, stirling2};
use crate::algebra::rational::{big, rat};
use crate::algebra::{Rational, Word};
use crate::error::{Error, Result};

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct MatrixQ {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl MatrixQ {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }

    /// Panics when the inner dimensions differ.
    pub fn mul(&self, other: &MatrixQ) -> MatrixQ {
        assert_eq!(self.cols, other.rows, "matrix dimensions do not agree");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    /// Row `i` applied to a column vector.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "vector length does not agree");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }
}

impl Index<(usize, usize)> for MatrixQ {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for MatrixQ {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &MatrixQ {
    type Output = MatrixQ;
    fn mul(self, rhs: &MatrixQ) -> MatrixQ {
        MatrixQ::mul(self, rhs)
    }
}

impl fmt::Debug for MatrixQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatrixQ {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Faulhaber matrix: `H⁻_{y_i}(N) = Σ_j m_{i,j} N^j`. Rows `i = 0..=n`,
/// columns `j = 1..=n+1`; entry `(i, j-1)` holds `m_{i,j}`.
pub fn build_m(n: usize) -> MatrixQ {
    let mut m = MatrixQ::zeros(n + 1, n + 1);
    for i in 0..=n {
        for j in 1..=n + 1 {
            let v = if i + 1 < j {
                Rational::zero()
            } else if j == 1 {
                if i == 1 {
                    rat(1, 2)
                } else {
                    bernoulli(i as u32)
                }
            } else {
                big(i) * &m[(i - 1, j - 2)] / big(j)
            };
            m[(i, j - 1)] = v;
        }
    }
    m
}

/// `u^i = Σ_{j<i} t_{i,j} e_j` with `e_0 = u` and `e_j = Li⁻_{y_j}`, where
/// `t_{i,j} = S₁(i, j+1)/(i-1)!`. Rows `i = 1..=n`, columns `j = 0..n`;
/// entry `(i-1, j)` holds `t_{i,j}`.
pub fn build_t(n: usize) -> MatrixQ {
    MatrixQ::from_fn(n, n, |r, j| {
        let i = r + 1;
        if i > j {
            big(stirling1(i as u32, j as u32 + 1)) / big(factorial(i as u32 - 1))
        } else {
            Rational::zero()
        }
    })
}

/// `X = (j! S₂(i, j))` for `1 ≤ i, j ≤ n`; entry `(i-1, j-1)`.
pub fn build_x(n: usize) -> MatrixQ {
    MatrixQ::from_fn(n, n, |i, j| {
        let (i, j) = (i as u32 + 1, j as u32 + 1);
        big(factorial(j) * stirling2(i, j))
    })
}

fn check_positive(w: &Word) -> Result<()> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    if !w.is_positive() {
        return Err(Error::ZeroLetter(w.clone()));
    }
    Ok(())
}

fn prefix_products(w: &Word) -> Vec<Rational> {
    let mut acc = Rational::one();
    let mut out = vec![acc.clone()];
    for &s in w.indices() {
        acc *= big(s);
        out.push(acc.clone());
    }
    out
}

/// `D(w)` for `w = y_{n_1}…y_{n_r}`: lower triangular, `d_{i,i} = n_1…n_i`,
/// `d_{i,j} = n_1…n_j b_{y_{n_{j+1}}…y_{n_i}}`.
pub fn build_d(w: &Word, fam: &ExtBernoulliFamily) -> Result<MatrixQ> {
    build_d_with(w, &|v| fam.constant(v))
}

pub fn build_d_with(w: &Word, constant: &dyn Fn(&Word) -> Rational) -> Result<MatrixQ> {
    check_positive(w)?;
    let r = w.len();
    let p = prefix_products(w);
    Ok(MatrixQ::from_fn(r, r, |i, j| {
        let (i, j) = (i + 1, j + 1);
        match i.cmp(&j) {
            std::cmp::Ordering::Less => Rational::zero(),
            std::cmp::Ordering::Equal => p[i].clone(),
            std::cmp::Ordering::Greater => &p[j] * constant(&w.factor(j, i)),
        }
    }))
}

/// `D(w)⁻¹` from the closed form `v_{i,i} = 1/(n_1…n_i)`,
/// `v_{i,j} = -b'_{y_{n_{j+1}}…y_{n_i}}/(n_1…n_i)`.
pub fn build_dinv(w: &Word, fam: &ExtBernoulliFamily) -> Result<MatrixQ> {
    build_dinv_with(w, &|v| fam.constant(v))
}

pub fn build_dinv_with(w: &Word, constant: &dyn Fn(&Word) -> Rational) -> Result<MatrixQ> {
    check_positive(w)?;
    let r = w.len();
    let p = prefix_products(w);
    Ok(MatrixQ::from_fn(r, r, |i, j| {
        let (i, j) = (i + 1, j + 1);
        match i.cmp(&j) {
            std::cmp::Ordering::Less => Rational::zero(),
            std::cmp::Ordering::Equal => p[i].recip(),
            std::cmp::Ordering::Greater => -bprime_with(&w.factor(j, i), constant) / &p[i],
        }
    }))
}
