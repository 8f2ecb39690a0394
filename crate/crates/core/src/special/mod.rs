//! Bernoulli, Stirling and Eulerian numbers, the classical and extended
//! Eulerian polynomials, extended Bernoulli polynomials, and the matrices
//! `M`, `T`, `X`, `D`, `D⁻¹`.

mod bernoulli;
mod eulerian;
mod matrix;
mod numbers;

pub use bernoulli::{beta, bprime, bprime_with, ext_bernoulli, ExtBernoulliFamily};
pub use eulerian::{eulerian_number, eulerian_poly, eulerian_row_sum, ext_eulerian};
pub use matrix::{build_d, build_d_with, build_dinv, build_dinv_with, build_m, build_t, build_x, MatrixQ};
pub use numbers::{bernoulli, binomial, factorial, stirling1, stirling2, stirling2_via_s1};
