use serde::Serialize;

use super::arith::iroot;
use super::primality::is_prime;

/// Where an integer sits relative to the prime powers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum PrimePowerClass<T = u64> {
    One,
    Prime {
        p: T,
    },
    /// `p^n` with `n >= 2`.
    PrimePower {
        p: T,
        n: u32,
    },
    Composite,
}

impl<T> PrimePowerClass<T> {
    /// True for `1`, primes and proper prime powers.
    pub fn is_one_or_prime_power(&self) -> bool {
        !matches!(self, PrimePowerClass::Composite)
    }

    pub fn label(&self) -> &'static str {
        match self {
            PrimePowerClass::One => "one",
            PrimePowerClass::Prime { .. } => "prime",
            PrimePowerClass::PrimePower { .. } => "prime power",
            PrimePowerClass::Composite => "composite",
        }
    }
}

/// `(b, e)` with `b^e = n`, `e >= 2` maximal, or `None` when `n` is not a
/// perfect power.
pub fn perfect_power(n: u64) -> Option<(u64, u32)> {
    if n < 4 {
        return None;
    }
    let max_exp = 63 - n.leading_zeros();
    for e in (2..=max_exp).rev() {
        let b = iroot(n, e);
        if b >= 2 && b.pow(e) == n {
            return Some((b, e));
        }
    }
    None
}

pub fn classify_prime_power(n: u64) -> PrimePowerClass {
    if n == 1 {
        return PrimePowerClass::One;
    }
    match perfect_power(n) {
        // e is maximal, so b itself is not a perfect power
        Some((b, e)) if is_prime(b) => PrimePowerClass::PrimePower { p: b, n: e },
        Some(_) => PrimePowerClass::Composite,
        None if is_prime(n) => PrimePowerClass::Prime { p: n },
        None => PrimePowerClass::Composite,
    }
}

/// `(p, k)` with `n = p^k`, `k >= 1`, if `n` is a prime power.
pub fn as_prime_power(n: u64) -> Option<(u64, u32)> {
    match classify_prime_power(n) {
        PrimePowerClass::Prime { p } => Some((p, 1)),
        PrimePowerClass::PrimePower { p, n } => Some((p, n)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_values() {
        assert_eq!(classify_prime_power(1), PrimePowerClass::One);
        assert_eq!(
            classify_prime_power(8),
            PrimePowerClass::PrimePower { p: 2, n: 3 }
        );
        assert_eq!(classify_prime_power(12), PrimePowerClass::Composite);
        assert_eq!(perfect_power(9), Some((3, 2)));
        assert_eq!(perfect_power(64), Some((2, 6)));
        assert_eq!(perfect_power(10), None);
    }

    #[test]
    fn extremes() {
        assert_eq!(perfect_power(1 << 63), Some((2, 63)));
        assert_eq!(perfect_power(u64::MAX), None);
        assert_eq!(
            classify_prime_power(3u64.pow(40)),
            PrimePowerClass::PrimePower { p: 3, n: 40 }
        );
        assert_eq!(perfect_power(36), Some((6, 2)));
        assert_eq!(classify_prime_power(36), PrimePowerClass::Composite);
    }
}
