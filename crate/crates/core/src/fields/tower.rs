use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::nt::{is_prime, multiplicative_order, PrimePowerClass};

use super::FieldError;

/// Largest `n_i` for which `q^{n_i} - 1` is materialized.
pub const MAX_TOWER_EXPONENT: u64 = 1 << 22;

/// One level `F_q(ζ_{p^i})` of the cyclotomic tower.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TowerStep {
    pub i: u32,
    /// Multiplicative order of `q` modulo `p^i`; the level has `q^{n_i}` elements.
    pub n_i: u64,
    /// Exponent of `p` in `q^{n_i} - 1`.
    pub p_valuation: u32,
    /// Whether `q^{n_i} - 1` is a pure power of `p`.
    pub is_p_power: bool,
}

/// The first level at which `q^{n_i} - 1` is not a power of `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerObstruction {
    pub q: u64,
    pub p: u64,
    pub i: u32,
    pub n_i: u64,
    pub value: BigUint,
    pub class: PrimePowerClass<BigUint>,
    pub steps: Vec<TowerStep>,
}

/// Walks `i = 1, 2, ...` and stops at the first `i` where `q^{n_i} - 1` fails
/// to be a power of `p`, with `n_i = ord_{p^i}(q)`.
pub fn tower_obstruction(q: u64, p: u64, i_max: u32) -> Result<TowerObstruction, FieldError> {
    if !is_prime(q) || !is_prime(p) {
        return Err(FieldError::InvalidInput(format!(
            "{q} and {p} must both be prime"
        )));
    }
    if q == p {
        return Err(FieldError::InvalidInput("q and p must differ".into()));
    }
    if i_max == 0 {
        return Err(FieldError::InvalidInput("i_max must be at least 1".into()));
    }
    let big_p = BigUint::from(p);
    let mut steps = Vec::new();
    for i in 1..=i_max {
        let modulus = p
            .checked_pow(i)
            .ok_or_else(|| FieldError::ResourceLimit(format!("{p}^{i} does not fit in 64 bits")))?;
        let n_i = multiplicative_order(q, modulus).expect("q is a unit mod p^i");
        if n_i > MAX_TOWER_EXPONENT {
            return Err(FieldError::ResourceLimit(format!(
                "{q}^{n_i} - 1 is too large to evaluate"
            )));
        }
        let value = BigUint::from(q).pow(n_i as u32) - 1u32;
        // p^i divides the value by construction of n_i
        let mut rest = value.clone();
        let mut valuation = 0u32;
        loop {
            let (quot, rem) = rest.div_rem(&big_p);
            if !rem.is_zero() {
                break;
            }
            rest = quot;
            valuation += 1;
        }
        let is_p_power = rest.is_one();
        steps.push(TowerStep {
            i,
            n_i,
            p_valuation: valuation,
            is_p_power,
        });
        if !is_p_power {
            return Ok(TowerObstruction {
                q,
                p,
                i,
                n_i,
                value,
                // divisible by p and by some other prime
                class: PrimePowerClass::Composite,
                steps,
            });
        }
    }
    Err(FieldError::NotFound(format!(
        "no obstruction for q = {q}, p = {p} up to i = {i_max}"
    )))
}

/// Classification of a tower value that is a pure power of `p`.
pub fn p_power_class(p: u64, valuation: u32) -> PrimePowerClass<BigUint> {
    match valuation {
        0 => PrimePowerClass::One,
        1 => PrimePowerClass::Prime {
            p: BigUint::from(p),
        },
        n => PrimePowerClass::PrimePower {
            p: BigUint::from(p),
            n,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_obstructions() {
        let t = tower_obstruction(3, 5, 8).unwrap();
        assert_eq!((t.i, t.n_i), (1, 4));
        assert_eq!(t.value, BigUint::from(80u32));

        let t = tower_obstruction(2, 3, 8).unwrap();
        assert_eq!(t.i, 2);
        assert_eq!(t.steps[0].n_i, 2);
        assert!(t.steps[0].is_p_power);
        assert_eq!(t.n_i, 6);
        assert_eq!(t.value, BigUint::from(63u32));
        assert_eq!(t.class, PrimePowerClass::Composite);

        let t = tower_obstruction(2, 7, 8).unwrap();
        assert_eq!((t.i, t.n_i), (2, 21));
        assert!((&t.value % 127u32).is_zero());
    }

    #[test]
    fn powers_of_two_persist_for_fermat_bases() {
        // 17 - 1 = 2^4 keeps every level up to i = 4 a 2-group
        let t = tower_obstruction(17, 2, 10).unwrap();
        assert_eq!(t.i, 5);
        assert!(t.steps[..4].iter().all(|s| s.is_p_power));
        // F_9 is the level i = 2, 3 for q = 3
        let t = tower_obstruction(3, 2, 10).unwrap();
        assert_eq!(t.i, 4);
        assert!(matches!(
            tower_obstruction(3, 2, 3),
            Err(FieldError::NotFound(_))
        ));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(tower_obstruction(4, 3, 2).is_err());
        assert!(tower_obstruction(3, 3, 2).is_err());
    }
}
