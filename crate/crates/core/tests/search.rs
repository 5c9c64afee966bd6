use std::collections::BTreeSet;

use indecomp::nt::{is_fermat_prime, is_mersenne_prime};
use indecomp::search::{
    bang_scan, catalan_scan, consecutive_prime_powers, primitive_prime_divisor,
    primitive_prime_divisor_unchecked, scan_indecomposable_fields, CatalanSolution, PrimePowerPair,
    SearchError, SearchOptions, SegmentedSieve, MAX_SIEVE_BOUND,
};
use num_bigint::BigUint;
use proptest::prelude::*;

fn workers(n: usize) -> SearchOptions {
    SearchOptions::with_workers(n)
}

/// Smallest-prime-factor table up to `n`.
fn spf(n: u64) -> Vec<u64> {
    let mut s: Vec<u64> = (0..=n).collect();
    let mut i = 2;
    while i * i <= n {
        if s[i as usize] == i {
            for j in (i * i..=n).step_by(i as usize) {
                if s[j as usize] == j {
                    s[j as usize] = i;
                }
            }
        }
        i += 1;
    }
    s
}

fn prime_power_of(s: &[u64], m: u64) -> Option<(u64, u32)> {
    if m < 2 {
        return None;
    }
    let p = s[m as usize];
    let (mut r, mut k) = (m, 0);
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p, k))
}

/// The four field cases assembled independently: F_2, Fermat primes, F_9
/// and 2^r with 2^r - 1 a Mersenne prime.
fn four_cases(n: u64) -> BTreeSet<u64> {
    let mut out = BTreeSet::from([2]);
    if n >= 9 {
        out.insert(9);
    }
    for k in 0..6 {
        let f = (1u64 << (1u64 << k)) + 1;
        if f <= n && is_fermat_prime(f) {
            out.insert(f);
        }
    }
    for r in 2..63 {
        let q = 1u64 << r;
        if q <= n && is_mersenne_prime(q - 1) {
            out.insert(q);
        }
    }
    out
}

#[test]
fn field_scan_matches_four_cases() {
    for n in [100, 10_000, 1_000_000] {
        let got: BTreeSet<u64> = scan_indecomposable_fields(n, &workers(4))
            .unwrap()
            .findings
            .into_iter()
            .collect();
        assert_eq!(got, four_cases(n), "{n}");
    }
    let expected = [
        2, 3, 4, 5, 8, 9, 17, 32, 128, 257, 8192, 65537, 131072, 524288,
    ];
    assert_eq!(
        scan_indecomposable_fields(1_000_000, &workers(2))
            .unwrap()
            .findings,
        expected
    );
}

#[test]
fn field_scan_matches_naive_oracle() {
    let n = 10_000;
    let s = spf(n);
    let naive: Vec<u64> = (2..=n)
        .filter(|&q| prime_power_of(&s, q).is_some())
        .filter(|&q| q == 2 || prime_power_of(&s, q - 1).is_some())
        .collect();
    assert_eq!(
        scan_indecomposable_fields(n, &workers(3)).unwrap().findings,
        naive
    );
}

#[test]
fn pairs_match_naive_oracle() {
    let n = 10_000;
    let s = spf(n);
    let naive: Vec<(u64, u64)> = (2..n)
        .filter(|&a| prime_power_of(&s, a).is_some() && prime_power_of(&s, a + 1).is_some())
        .map(|a| (a, a + 1))
        .collect();
    let got = consecutive_prime_powers(n, &workers(3)).unwrap().findings;
    assert_eq!(got.iter().map(|p| (p.a, p.b)).collect::<Vec<_>>(), naive);
    for p in &got {
        assert_eq!(prime_power_of(&s, p.a), Some((p.a_prime, p.a_exponent)));
        assert_eq!(prime_power_of(&s, p.b), Some((p.b_prime, p.b_exponent)));
    }
}

#[test]
fn pairs_follow_the_parity_argument() {
    let got = consecutive_prime_powers(1_000_000, &workers(4))
        .unwrap()
        .findings;
    for p in &got {
        let mersenne = p.b_prime == 2 && is_mersenne_prime(p.a);
        let fermat = p.a_prime == 2 && is_fermat_prime(p.b);
        assert!(
            mersenne || fermat || (p.a, p.b) == (8, 9) || (p.a, p.b) == (2, 3),
            "{p:?}"
        );
    }
    for n in [9, 100, 100_000, 1_000_000] {
        let higher: Vec<(u64, u64)> = consecutive_prime_powers(n, &workers(2))
            .unwrap()
            .findings
            .iter()
            .filter(|p| p.both_higher_powers())
            .map(|p| (p.a, p.b))
            .collect();
        assert_eq!(higher, [(8, 9)], "{n}");
    }
}

#[test]
fn catalan_matches_naive_oracle() {
    let n = 1_000_000u64;
    let mut powers = BTreeSet::new();
    let mut reps = Vec::new();
    for x in 2..=1000u64 {
        let mut m = x * x;
        let mut u = 2;
        while m <= n {
            powers.insert(m);
            reps.push((m, x, u));
            m *= x;
            u += 1;
        }
    }
    let mut naive = Vec::new();
    for &(m, x, u) in &reps {
        for &(m2, y, v) in &reps {
            if m2 + 1 == m {
                naive.push(CatalanSolution { x, u, y, v });
            }
        }
    }
    naive.sort();
    assert_eq!(catalan_scan(n, &workers(3)).unwrap().findings, naive);
    assert_eq!(
        naive,
        [CatalanSolution {
            x: 3,
            u: 2,
            y: 2,
            v: 3
        }]
    );
    assert!(catalan_scan(8, &workers(1)).unwrap().findings.is_empty());
}

#[test]
fn catalan_and_prime_power_pairs_agree() {
    let n = 1_000_000;
    let pairs: Vec<PrimePowerPair> = consecutive_prime_powers(n, &workers(2))
        .unwrap()
        .findings
        .into_iter()
        .filter(|p| p.both_higher_powers())
        .collect();
    let catalan = catalan_scan(n, &workers(2)).unwrap().findings;
    let from_pairs: BTreeSet<(u64, u64)> = pairs.iter().map(|p| (p.a, p.b)).collect();
    let from_catalan: BTreeSet<(u64, u64)> = catalan
        .iter()
        .map(|c| (c.y.pow(c.v), c.x.pow(c.u)))
        .collect();
    assert_eq!(from_pairs, from_catalan);
}

#[test]
fn scans_are_independent_of_partitioning() {
    let mut configs = Vec::new();
    for w in [1, 2, 3, 8] {
        for seg in [1000, 4096, 1 << 16] {
            configs.push(SearchOptions {
                segment_size: seg,
                ..workers(w)
            });
        }
    }
    let base = &configs[0];
    let fields = scan_indecomposable_fields(300_000, base).unwrap().findings;
    let pairs = consecutive_prime_powers(300_000, base).unwrap().findings;
    let catalan = catalan_scan(10_000_000, base).unwrap().findings;
    let bang = bang_scan(12, 12, base).unwrap().findings;
    for o in &configs[1..] {
        assert_eq!(
            scan_indecomposable_fields(300_000, o).unwrap().findings,
            fields,
            "{o:?}"
        );
        assert_eq!(
            consecutive_prime_powers(300_000, o).unwrap().findings,
            pairs,
            "{o:?}"
        );
        assert_eq!(
            catalan_scan(10_000_000, o).unwrap().findings,
            catalan,
            "{o:?}"
        );
        assert_eq!(bang_scan(12, 12, o).unwrap().findings, bang, "{o:?}");
    }
}

#[test]
fn segmented_sieve_matches_oracle() {
    let n = 200_000u64;
    let s = spf(n);
    let primes: Vec<u64> = (2..=n).filter(|&m| s[m as usize] == m).collect();
    for seg in [1, 7, 1000, 1 << 20] {
        let sieve = SegmentedSieve::new(n, seg);
        assert_eq!(sieve.primes_in(2, n), primes, "{seg}");
        let window: Vec<u64> = primes
            .iter()
            .copied()
            .filter(|&p| (99_000..=123_456).contains(&p))
            .collect();
        assert_eq!(sieve.primes_in(99_000, 123_456), window);
    }
}

#[test]
fn bounds_are_checked() {
    let o = workers(1);
    assert!(matches!(
        scan_indecomposable_fields(1, &o),
        Err(SearchError::InvalidInput(_))
    ));
    assert!(matches!(
        catalan_scan(3, &o),
        Err(SearchError::InvalidInput(_))
    ));
    assert!(matches!(
        consecutive_prime_powers(2, &o),
        Err(SearchError::InvalidInput(_))
    ));
    for n in [MAX_SIEVE_BOUND + 1, u64::MAX] {
        assert!(matches!(
            scan_indecomposable_fields(n, &o),
            Err(SearchError::ResourceLimit(_))
        ));
        assert!(matches!(
            consecutive_prime_powers(n, &o),
            Err(SearchError::ResourceLimit(_))
        ));
    }
    let tight = SearchOptions {
        factor_bits: 64,
        ..o
    };
    assert!(matches!(
        primitive_prime_divisor(3, 50, &tight),
        Err(SearchError::ResourceLimit(_))
    ));
}

#[test]
fn documented_bang_values() {
    let o = workers(2);
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
    let all = bang_scan(10, 10, &o).unwrap();
    assert_eq!(all.findings.len(), 64);
    let single = bang_scan(3, 3, &o).unwrap().findings;
    assert_eq!(
        (single[0].a, single[0].t, single[0].witness.clone()),
        (3, 3, BigUint::from(13u32))
    );
    assert!(bang_scan(2, 10, &o).unwrap().findings.is_empty());
}

/// Smallest prime `l` with multiplicative order of `a` mod `l` equal to `t`,
/// by trial division of `a^t - 1`.
fn naive_witness(a: u64, t: u32) -> Option<u128> {
    let mut v = (a as u128).pow(t) - 1;
    let mut l = 2u128;
    while l * l <= v {
        if v % l == 0 {
            if order_mod(a as u128, l) == t {
                return Some(l);
            }
            while v % l == 0 {
                v /= l;
            }
        }
        l += 1;
    }
    (v > 1 && order_mod(a as u128, v) == t).then_some(v)
}

fn order_mod(a: u128, l: u128) -> u32 {
    let (mut x, mut k) = (a % l, 1);
    while x != 1 {
        x = x * (a % l) % l;
        k += 1;
    }
    k
}

#[test]
fn bang_witnesses_are_minimal() {
    let o = workers(4);
    for w in bang_scan(12, 9, &o).unwrap().findings {
        let naive = naive_witness(w.a, w.t).expect("primitive divisor exists");
        assert_eq!(w.witness, BigUint::from(naive), "{} {}", w.a, w.t);
    }
    for t in 1..=20 {
        let got = primitive_prime_divisor_unchecked(2, t, &o).unwrap();
        assert_eq!(got, naive_witness(2, t).map(BigUint::from), "{t}");
    }
}

proptest! {
    #[test]
    fn field_scan_is_worker_independent(n in 2u64..50_000, w in 1usize..9) {
        let one = scan_indecomposable_fields(n, &workers(1)).unwrap().findings;
        let many = scan_indecomposable_fields(n, &workers(w)).unwrap().findings;
        prop_assert_eq!(&one, &many);
        prop_assert_eq!(one, four_cases(n).into_iter().collect::<Vec<_>>());
    }

    #[test]
    fn pair_scan_is_worker_independent(n in 3u64..50_000, w in 2usize..9, seg in 1u64..5000) {
        let one = consecutive_prime_powers(n, &workers(1)).unwrap().findings;
        let many = consecutive_prime_powers(n, &SearchOptions { segment_size: seg, ..workers(w) }).unwrap().findings;
        prop_assert_eq!(one, many);
    }
}
