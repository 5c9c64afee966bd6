use indecomp::nt::{
    as_prime_power, classify_field, classify_prime_power, factor, is_fermat_prime,
    is_mersenne_prime, is_prime, lucas_lehmer, perfect_power, FieldClass, PrimePowerClass,
};
use proptest::prelude::*;

/// Smallest prime factor of every n <= limit.
fn spf_table(limit: usize) -> Vec<u32> {
    let mut spf = vec![0u32; limit + 1];
    for i in 2..=limit {
        if spf[i] == 0 {
            let mut j = i;
            while j <= limit {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
                j += i;
            }
        }
    }
    spf
}

fn spf_factor(mut n: usize, spf: &[u32]) -> Vec<(u64, u32)> {
    let mut out: Vec<(u64, u32)> = Vec::new();
    while n > 1 {
        let p = spf[n] as usize;
        n /= p;
        match out.last_mut() {
            Some((q, e)) if *q == p as u64 => *e += 1,
            _ => out.push((p as u64, 1)),
        }
    }
    out
}

fn trial_is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

#[test]
fn primality_matches_sieve_to_one_million() {
    let spf = spf_table(1_000_000);
    for n in 1..=1_000_000usize {
        assert_eq!(is_prime(n as u64), spf[n] as usize == n, "{n}");
    }
}

#[test]
fn primality_examples() {
    assert!(!is_prime(1));
    assert!(is_prime(65537));
    assert!(!is_prime(2047));
    assert!(is_prime(18_446_744_073_709_551_557));
    // strong pseudoprime to bases 2..=37 below 3.3e24 does not fit u64; use a
    // Carmichael number and a base-2 pseudoprime instead
    assert!(!is_prime(561));
    assert!(!is_prime(3_215_031_751));
    for n in (1u64 << 40)..(1u64 << 40) + 2000 {
        assert_eq!(is_prime(n), trial_is_prime(n), "{n}");
    }
}

#[test]
fn prime_power_class_matches_factorization_to_one_million() {
    let spf = spf_table(1_000_000);
    assert_eq!(classify_prime_power(1), PrimePowerClass::One);
    for n in 2..=1_000_000usize {
        let f = spf_factor(n, &spf);
        let expected = match f.as_slice() {
            [(p, 1)] => PrimePowerClass::Prime { p: *p },
            [(p, e)] => PrimePowerClass::PrimePower { p: *p, n: *e },
            _ => PrimePowerClass::Composite,
        };
        assert_eq!(classify_prime_power(n as u64), expected, "{n}");
        assert_eq!(factor(n as u64).unwrap().factors, f, "{n}");
    }
}

#[test]
fn field_class_matches_prime_power_test_of_units() {
    let spf = spf_table(1 << 20);
    for p in (2..=1 << 20).filter(|&p| spf[p] as usize == p) {
        let mut q = p;
        let mut r = 1;
        while q <= 1 << 20 {
            let units = q - 1;
            let oracle = units == 1 || spf_factor(units, &spf).len() == 1;
            let class = classify_field(p as u64, r).unwrap();
            assert_eq!(class.is_indecomposable(), oracle, "p = {p}, r = {r}");
            q *= p;
            r += 1;
        }
    }
}

#[test]
fn field_class_cases() {
    assert_eq!(classify_field(2, 1).unwrap(), FieldClass::IndecF2);
    assert_eq!(classify_field(3, 2).unwrap(), FieldClass::IndecF9);
    assert_eq!(
        classify_field(65537, 1).unwrap(),
        FieldClass::IndecFermat(65537)
    );
    assert!(matches!(
        classify_field(2, 127).unwrap(),
        FieldClass::IndecMersennePlusOne(_)
    ));
    assert_eq!(classify_field(2, 11).unwrap(), FieldClass::Decomposable);
    assert_eq!(classify_field(3, 3).unwrap(), FieldClass::Decomposable);
    assert!(classify_field(4, 1).is_err());
    assert!(classify_field(3, 0).is_err());
}

#[test]
fn fermat_primes_by_shape() {
    let spf = spf_table(1 << 20);
    for n in 1..(1usize << 20) {
        let m = n - 1;
        let shape = n >= 3
            && spf[n] as usize == n
            && m.is_power_of_two()
            && (m.trailing_zeros() as u64).is_power_of_two();
        assert_eq!(is_fermat_prime(n as u64), shape, "{n}");
    }
    assert!(!is_fermat_prime(4_294_967_297)); // 641 * 6700417
    assert!(!is_fermat_prime(2));
}

#[test]
fn mersenne_primes_by_shape() {
    const EXPONENTS: [u32; 9] = [2, 3, 5, 7, 13, 17, 19, 31, 61];
    for r in 1..64 {
        let q = (1u64 << r) - 1;
        assert_eq!(is_mersenne_prime(q), EXPONENTS.contains(&r), "r = {r}");
        if r > 1 && r < 34 {
            assert_eq!(is_mersenne_prime(q), trial_is_prime(q), "r = {r}");
        }
    }
    for r in [89, 107, 127, 521, 607] {
        assert!(lucas_lehmer(r), "{r}");
    }
    for r in [67, 101, 257, 509] {
        assert!(!lucas_lehmer(r), "{r}");
    }
    assert!(!is_mersenne_prime(10));
}

proptest! {
    #[test]
    fn factorization_recomposes(n in 1u64..) {
        let f = factor(n).unwrap();
        prop_assert!(f.proven);
        prop_assert_eq!(f.recompose(), n);
        prop_assert!(f.factors.windows(2).all(|w| w[0].0 < w[1].0));
        prop_assert!(f.factors.iter().all(|&(p, e)| e >= 1 && is_prime(p)));
        prop_assert_eq!(f.factors.is_empty(), n == 1);
    }

    #[test]
    fn semiprimes_split(a in 2u64..(1 << 31), b in 2u64..(1 << 31)) {
        let (p, q) = (next_prime(a), next_prime(b));
        let f = factor(p * q).unwrap();
        let mut expected = if p == q { vec![(p, 2)] } else { vec![(p.min(q), 1), (p.max(q), 1)] };
        expected.sort();
        prop_assert_eq!(f.factors, expected);
    }

    #[test]
    fn perfect_powers_are_found(b in 2u64..1000, e in 2u32..7) {
        let n = b.pow(e);
        let (base, exp) = perfect_power(n).unwrap();
        prop_assert_eq!(base.pow(exp), n);
        prop_assert_eq!(exp % e, 0);
        // maximal exponent: the base is not itself a power
        prop_assert!(perfect_power(base).is_none());
    }

    #[test]
    fn prime_powers_round_trip(p in 2u64..10_000, k in 1u32..5) {
        let p = next_prime(p);
        prop_assert_eq!(as_prime_power(p.pow(k)), Some((p, k)));
    }
}

fn next_prime(mut n: u64) -> u64 {
    while !trial_is_prime(n) {
        n += 1;
    }
    n
}
