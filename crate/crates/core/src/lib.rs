//! Exact harmonic sums `H⁻_w` and polylogarithms `Li⁻_w` at non-positive
//! multi-indices.
//!
//! Words over the alphabet `Y₀ = {y₀, y₁, …}` index both families: the word
//! `y_{s₁}…y_{s_r}` stands for the multi-index `(-s₁, …, -s_r)`. Harmonic
//! sums come out as polynomials in the upper bound `N`; polylogarithms come
//! out as polynomials in `u = (1 - z)⁻¹`. Everything is exact rational
//! arithmetic.
//!
//! The crate is organised as
//! - [`algebra`]: rationals, words, noncommutative polynomials, shuffle and stuffle;
//! - [`special`]: Bernoulli, Stirling and Eulerian numbers, extended Eulerian and
//!   Bernoulli polynomials, and the Faulhaber-type matrices;
//! - [`harmonic`]: `H⁻_w`, the difference-equation solver and the Faulhaber identities;
//! - [`polylog`]: `Li⁻_w` by three independent routes, basis changes and the `χ` map;
//! - [`asymptotics`]: the characters `C⁻` and `B⁻` and their extension to polynomials;
//! - [`toplaw`]: the `⊤` product making `Li⁻` an algebra morphism, and kernel membership;
//! - [`verify`]: seeded, deterministic property suites over all of the above.

pub mod algebra;
pub mod asymptotics;
mod error;
pub mod harmonic;
mod memo;
pub mod poly;
pub mod polylog;
pub mod special;
pub mod toplaw;
pub mod verify;

pub use algebra::{Law, NCPoly, Rational, Word};
pub use error::{Error, ParseError, Result};
pub use poly::{NPoly, TPoly, ZPoly};
pub use polylog::LaurentU;
