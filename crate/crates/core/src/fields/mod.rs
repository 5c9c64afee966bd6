//! Concrete finite fields and the function field `F_2(x)`.
//!
//! `F_{p^r}` is built as `F_p[x]/(m)` with a reproducible choice of `m`;
//! elements are small integers encoding their coefficient vectors. The
//! module also carries the norm of a tower `F_q ⊂ F_{q^d}`, the cyclotomic
//! tower walk `F_q(ζ_{p^i})`, and unique factorization in `F_2[x]` for the
//! free unit group of `F_2(x)`.

mod function_field;
mod gf;
mod norm;
mod poly2;
mod poly_fp;
mod tower;

use thiserror::Error;

pub use function_field::{unit_exponent_vector, ExponentVector};
pub use gf::{
    build_field, build_field_with_limit, FieldElement, FiniteField, DEFAULT_FIELD_ORDER_LIMIT,
};
pub use norm::{norm, FieldTower};
pub use poly2::{factor_poly2, Poly2};
pub use poly_fp::PolyFp;
pub use tower::{
    p_power_class, tower_obstruction, TowerObstruction, TowerStep, MAX_TOWER_EXPONENT,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("resource limit: {0}")]
    ResourceLimit(String),
    #[error("not found: {0}")]
    NotFound(String),
}

/// Renders coefficients (lowest degree first) as `"x^3 + 2x + 1"`.
pub fn render_poly(coeffs: &[u64], var: &str) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| {
            let coeff = if c == 1 && i > 0 {
                String::new()
            } else {
                c.to_string()
            };
            match i {
                0 => coeff,
                1 => format!("{coeff}{var}"),
                _ => format!("{coeff}{var}^{i}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}
