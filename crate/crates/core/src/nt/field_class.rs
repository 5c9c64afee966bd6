use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use super::primality::is_prime;
use super::special::{is_fermat_prime, lucas_lehmer};
use super::NtError;

/// Which finite fields have an indecomposable multiplicative group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldClass {
    IndecF2,
    IndecF9,
    /// `F_p` with `p` a Fermat prime.
    IndecFermat(u64),
    /// `F_{q+1}` with `q = 2^r - 1` a Mersenne prime.
    IndecMersennePlusOne(BigUint),
    Decomposable,
}

impl FieldClass {
    pub fn is_indecomposable(&self) -> bool {
        !matches!(self, FieldClass::Decomposable)
    }
}

impl fmt::Display for FieldClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldClass::IndecF2 => write!(f, "F_2"),
            FieldClass::IndecF9 => write!(f, "F_9"),
            FieldClass::IndecFermat(p) => write!(f, "F_{p} (Fermat prime)"),
            FieldClass::IndecMersennePlusOne(q) => {
                write!(f, "F_{} (Mersenne prime {q} plus one)", q + 1u32)
            }
            FieldClass::Decomposable => write!(f, "decomposable"),
        }
    }
}

/// Classifies `F_{p^r}` by the four indecomposable cases.
///
/// Works for every `r`: the only family with `r >= 3` is `p = 2`, which is
/// settled by Lucas–Lehmer on `2^r - 1`.
pub fn classify_field(p: u64, r: u32) -> Result<FieldClass, NtError> {
    if !is_prime(p) {
        return Err(NtError::InvalidInput(format!("{p} is not prime")));
    }
    if r == 0 {
        return Err(NtError::InvalidInput(
            "field degree must be at least 1".into(),
        ));
    }
    Ok(match (p, r) {
        (2, 1) => FieldClass::IndecF2,
        (3, 2) => FieldClass::IndecF9,
        (p, 1) if is_fermat_prime(p) => FieldClass::IndecFermat(p),
        (2, r) if lucas_lehmer(r) => {
            FieldClass::IndecMersennePlusOne((BigUint::one() << r as usize) - 1u32)
        }
        _ => FieldClass::Decomposable,
    })
}
