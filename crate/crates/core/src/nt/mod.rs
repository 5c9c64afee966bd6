//! Exact integer number theory: primality, factorization, prime-power and
//! perfect-power recognition, Fermat/Mersenne tests and the classification
//! of finite fields by indecomposability of their unit groups.

mod arith;
pub mod big;
mod factor;
mod field_class;
mod power;
mod primality;
mod special;

use thiserror::Error;

pub use arith::{gcd, inv_mod, iroot, is_power_of_two, lcm, mul_mod, pow_mod};
pub use factor::{factor, factor_with, FactorLimits, Factorization};
pub use field_class::{classify_field, FieldClass};
pub use power::{as_prime_power, classify_prime_power, perfect_power, PrimePowerClass};
pub use primality::is_prime;
pub use special::{is_fermat_prime, is_mersenne_prime, lucas_lehmer, pepin};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NtError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("resource limit: {0}")]
    ResourceLimit(String),
}

/// Multiplicative order of `a` modulo `m`, for `gcd(a, m) = 1` and `m >= 2`.
pub fn multiplicative_order(a: u64, m: u64) -> Option<u64> {
    if m < 2 || gcd(a % m, m) != 1 {
        return None;
    }
    let lambda = factor(m).ok()?.totient();
    let mut ord = lambda;
    for (p, _) in factor(lambda).ok()?.factors {
        while ord % p == 0 && pow_mod(a, ord / p, m) == 1 {
            ord /= p;
        }
    }
    Some(ord)
}
