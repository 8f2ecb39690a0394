//! Polylogarithms at non-positive multi-indices,
//! `Li⁻_{y_{s₁}…y_{s_r}}(z) = Σ_{n₁ > … > n_r > 0} n₁^{s₁}…n_r^{s_r} z^{n₁}`,
//! as polynomials in `u = (1 - z)⁻¹`.

mod basis;
mod laurent;
mod routes;
mod series;

pub use basis::{chi, hsum_letter_decompose, li_basis_decompose, u_power_in_li_basis, LetterExpansion};
pub use laurent::LaurentU;
pub use routes::{lij_assemble, lij_table, polylog_lij, polylog_op, polylog_poly, polylog_rec};
pub use series::{eulerian_form_check, li_series_brute, taylor_coeffs};

/// `θ₀ = z d/dz` on Laurent polynomials in `u`.
pub fn theta0(f: &LaurentU) -> LaurentU {
    f.theta0()
}

/// Multiplication by `λ = z/(1-z) = u - 1`.
pub fn lambda_mul(f: &LaurentU) -> LaurentU {
    f.lambda_mul()
}
