//! Fermat and Mersenne prime recognition.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::arith::{is_power_of_two, pow_mod};
use super::primality::is_prime;

/// True iff `p = 2^(2^n) + 1` is prime. Uses Pépin's test.
pub fn is_fermat_prime(p: u64) -> bool {
    if p < 3 || !is_power_of_two(p - 1) {
        return false;
    }
    let k = (p - 1).trailing_zeros();
    if !is_power_of_two(k as u64) {
        // 2^k + 1 with k not a power of two has the factor 2^(k/m) + 1
        return false;
    }
    if p == 3 {
        return true;
    }
    pepin(p)
}

/// Pépin's criterion for a Fermat number `p = F_n`, `n >= 1`.
pub fn pepin(p: u64) -> bool {
    pow_mod(3, (p - 1) / 2, p) == p - 1
}

/// True iff `q = 2^r - 1` is prime. Uses the Lucas–Lehmer test.
pub fn is_mersenne_prime(q: u64) -> bool {
    if q < 3 || q == u64::MAX || !is_power_of_two(q + 1) {
        return false;
    }
    let r = (q + 1).trailing_zeros();
    lucas_lehmer(r)
}

/// Decides whether `2^r - 1` is prime, for any `r`.
pub fn lucas_lehmer(r: u32) -> bool {
    if r < 2 || !is_prime(r as u64) {
        return false;
    }
    if r == 2 {
        return true;
    }
    if r < 64 {
        let m = (1u128 << r) - 1;
        let mut s: u128 = 4;
        for _ in 0..r - 2 {
            s = mersenne_reduce_u128(s * s, r, m);
            s = if s >= 2 { s - 2 } else { s + m - 2 };
        }
        return s == 0;
    }
    let m = (BigUint::one() << r as usize) - 1u32;
    let two = BigUint::from(2u32);
    let mut s = BigUint::from(4u32);
    for _ in 0..r - 2 {
        s = mersenne_reduce(&s * &s, r, &m);
        s = if s >= two { s - &two } else { s + &m - &two };
    }
    s.is_zero()
}

fn mersenne_reduce_u128(mut x: u128, r: u32, m: u128) -> u128 {
    while x > m {
        x = (x & m) + (x >> r);
    }
    if x == m {
        0
    } else {
        x
    }
}

fn mersenne_reduce(mut x: BigUint, r: u32, m: &BigUint) -> BigUint {
    while &x > m {
        x = (&x & m) + (&x >> r as usize);
    }
    if &x == m {
        BigUint::zero()
    } else {
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_values() {
        assert!(is_fermat_prime(5));
        assert!(!is_fermat_prime(7));
        assert!(is_fermat_prime(65537));
        assert!(is_mersenne_prime(7));
        assert!(!is_mersenne_prime(2047));
        assert!(!is_mersenne_prime(6));
    }

    #[test]
    fn two_is_not_a_fermat_prime() {
        assert!(!is_fermat_prime(2));
        assert!(!is_mersenne_prime(2));
        assert!(is_mersenne_prime(3));
    }

    #[test]
    fn fermat_f5_is_composite() {
        assert!(!is_fermat_prime((1u64 << 32) + 1));
    }

    #[test]
    fn known_mersenne_exponents() {
        let known = [2u32, 3, 5, 7, 13, 17, 19, 31, 61, 89, 107, 127, 521, 607];
        for r in 2..=610u32 {
            assert_eq!(lucas_lehmer(r), known.contains(&r), "r = {r}");
        }
        assert!(is_mersenne_prime((1u64 << 61) - 1));
        assert!(!is_mersenne_prime((1u64 << 59) - 1));
    }
}
