//! Exact rationals, words over `Y₀ = {y₀, y₁, …}`, noncommutative polynomials
//! `ℚ⟨Y₀⟩`, and the shuffle and stuffle products.

mod ncpoly;
mod products;
pub mod rational;
mod text;
mod word;

pub use ncpoly::NCPoly;
pub use products::{shuffle, stuffle, Law};
pub use rational::Rational;
pub use text::{parse_ncpoly, parse_rational, parse_word};
pub use word::{words_of_grade, words_up_to_grade, Word};
