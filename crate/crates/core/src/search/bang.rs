use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::nt::big::{factor_big, BigFactorLimits};
use crate::nt::factor;

use super::{parallel_chunks, ScanReport, SearchError, SearchOptions};

/// A primitive prime divisor `witness` of `a^t - 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct BangWitness {
    pub a: u64,
    pub t: u32,
    /// A JSON number when it fits in 64 bits, otherwise a decimal string.
    #[serde(serialize_with = "serialize_big")]
    pub witness: BigUint,
}

fn serialize_big<S: Serializer>(n: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    match n.to_u64() {
        Some(small) => s.serialize_u64(small),
        None => s.collect_str(n),
    }
}

fn limits(options: &SearchOptions) -> BigFactorLimits {
    BigFactorLimits {
        max_bits: options.factor_bits,
        ..BigFactorLimits::default()
    }
}

/// Smallest prime dividing `a^t - 1` but no `a^j - 1` with `0 < j < t`,
/// without checking that `a, t > 2`.
pub fn primitive_prime_divisor_unchecked(
    a: u64,
    t: u32,
    options: &SearchOptions,
) -> Result<Option<BigUint>, SearchError> {
    if a < 2 || t < 1 {
        return Err(SearchError::InvalidInput(format!(
            "need a >= 2 and t >= 1, got a = {a}, t = {t}"
        )));
    }
    let base = BigUint::from(a);
    let value = base.pow(t) - 1u32;
    if value.bits() > options.factor_bits {
        return Err(SearchError::ResourceLimit(format!(
            "{a}^{t} - 1 has {} bits, above the factoring bound of {}",
            value.bits(),
            options.factor_bits
        )));
    }
    let fact = factor_big(&value, &limits(options))?;
    // ord_l(a) divides t, so it equals t iff a^(t/r) != 1 mod l for each prime r | t
    let t_primes: Vec<u64> = factor(t as u64)?.distinct_primes().collect();
    Ok(fact
        .factors
        .iter()
        .map(|(l, _)| l)
        .find(|l| {
            t_primes
                .iter()
                .all(|&r| !base.modpow(&BigUint::from(t as u64 / r), l).is_one())
        })
        .cloned())
}

/// Smallest primitive prime divisor of `a^t - 1` for `a, t > 2`.
pub fn primitive_prime_divisor(
    a: u64,
    t: u32,
    options: &SearchOptions,
) -> Result<BigUint, SearchError> {
    if a <= 2 || t <= 2 {
        return Err(SearchError::HypothesisViolation(format!(
            "primitive divisors are guaranteed only for a > 2 and t > 2, got a = {a}, t = {t}"
        )));
    }
    primitive_prime_divisor_unchecked(a, t, options)?.ok_or_else(|| {
        SearchError::HypothesisViolation(format!("{a}^{t} - 1 has no primitive prime divisor"))
    })
}

/// Witnesses for every `3 <= a <= a_max`, `3 <= t <= t_max`.
pub fn bang_scan(
    a_max: u64,
    t_max: u32,
    options: &SearchOptions,
) -> Result<ScanReport<BangWitness>, SearchError> {
    ScanReport::timed("bang", a_max, options, || {
        if t_max < 3 {
            return Ok(Vec::new());
        }
        parallel_chunks(3, a_max, options, |lo, hi| {
            let mut found = Vec::new();
            for a in lo..=hi {
                for t in 3..=t_max {
                    let witness = primitive_prime_divisor(a, t, options)?;
                    found.push(BangWitness { a, t, witness });
                }
            }
            Ok(found)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_witnesses() {
        let o = SearchOptions::with_workers(1);
        assert_eq!(
            primitive_prime_divisor(3, 4, &o).unwrap(),
            BigUint::from(5u32)
        );
        assert_eq!(
            primitive_prime_divisor(3, 5, &o).unwrap(),
            BigUint::from(11u32)
        );
        assert!(matches!(
            primitive_prime_divisor(2, 6, &o),
            Err(SearchError::HypothesisViolation(_))
        ));
        assert_eq!(primitive_prime_divisor_unchecked(2, 6, &o).unwrap(), None);
        assert_eq!(
            primitive_prime_divisor_unchecked(2, 5, &o).unwrap(),
            Some(BigUint::from(31u32))
        );
    }

    #[test]
    fn scan_examples() {
        let o = SearchOptions::with_workers(3);
        let r = bang_scan(10, 10, &o).unwrap();
        assert_eq!(r.findings.len(), 64);
        let r = bang_scan(3, 3, &o).unwrap();
        assert_eq!(
            r.findings,
            vec![BangWitness {
                a: 3,
                t: 3,
                witness: BigUint::from(13u32)
            }]
        );
        assert!(bang_scan(2, 10, &o).unwrap().findings.is_empty());
    }

    #[test]
    fn factoring_bound_is_enforced() {
        let o = SearchOptions {
            factor_bits: 64,
            ..SearchOptions::with_workers(1)
        };
        assert!(matches!(
            primitive_prime_divisor(10, 30, &o),
            Err(SearchError::ResourceLimit(_))
        ));
    }
}
