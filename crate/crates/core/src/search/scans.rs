use serde::Serialize;

use crate::nt::{classify_prime_power, iroot, perfect_power};

use super::sieve::SegmentedSieve;
use super::{parallel_chunks, ScanReport, SearchError, SearchOptions};

/// Largest bound accepted by the sieve-based scans.
pub const MAX_SIEVE_BOUND: u64 = 1_000_000_000_000;

fn check_bound(n: u64, min: u64) -> Result<(), SearchError> {
    if n < min {
        return Err(SearchError::InvalidInput(format!(
            "the bound must be at least {min}, got {n}"
        )));
    }
    if n > MAX_SIEVE_BOUND {
        return Err(SearchError::ResourceLimit(format!(
            "the bound {n} exceeds the sieve capacity {MAX_SIEVE_BOUND}"
        )));
    }
    Ok(())
}

/// Every prime power `q <= n` such that `q - 1` is 1 or a prime power,
/// that is, `F_q` has an indecomposable unit group.
pub fn scan_indecomposable_fields(
    n: u64,
    options: &SearchOptions,
) -> Result<ScanReport<u64>, SearchError> {
    check_bound(n, 2)?;
    ScanReport::timed("indecomposable_fields", n, options, || {
        let sieve = SegmentedSieve::new(n, options.segment_size);
        parallel_chunks(2, n, options, |lo, hi| {
            let mut found = Vec::new();
            sieve.for_each_prime(lo, hi, |p| {
                let mut q = p;
                loop {
                    if classify_prime_power(q - 1).is_one_or_prime_power() {
                        found.push(q);
                    }
                    match q.checked_mul(p) {
                        Some(next) if next <= n => q = next,
                        _ => break,
                    }
                }
            });
            Ok(found)
        })
    })
}

/// `x^u - y^v = 1` with `x, y, u, v >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CatalanSolution {
    pub x: u64,
    pub u: u32,
    pub y: u64,
    pub v: u32,
}

/// Every `(b, e)` with `b^e = m`, `b >= 2`, `e >= 2`.
fn power_representations(m: u64) -> Vec<(u64, u32)> {
    match perfect_power(m) {
        None => Vec::new(),
        Some((b, e)) => (2..=e)
            .filter(|v| e % v == 0)
            .map(|v| (b.pow(e / v), v))
            .collect(),
    }
}

/// All Catalan solutions with `x^u <= n`, found by walking every perfect
/// power `m <= n` and testing `m - 1`.
pub fn catalan_scan(
    n: u64,
    options: &SearchOptions,
) -> Result<ScanReport<CatalanSolution>, SearchError> {
    check_bound(n, 4)?;
    ScanReport::timed("catalan", n, options, || {
        parallel_chunks(2, iroot(n, 2), options, |lo, hi| {
            let mut found = Vec::new();
            for x in lo..=hi {
                let mut m = x;
                for u in 2.. {
                    m = match m.checked_mul(x) {
                        Some(m) if m <= n => m,
                        _ => break,
                    };
                    for (y, v) in power_representations(m - 1) {
                        found.push(CatalanSolution { x, u, y, v });
                    }
                }
            }
            Ok(found)
        })
    })
}

/// Consecutive prime powers `a = p^i`, `b = a + 1 = q^j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PrimePowerPair {
    pub a: u64,
    pub b: u64,
    pub a_prime: u64,
    pub a_exponent: u32,
    pub b_prime: u64,
    pub b_exponent: u32,
}

impl PrimePowerPair {
    /// Both members are proper powers.
    pub fn both_higher_powers(&self) -> bool {
        self.a_exponent >= 2 && self.b_exponent >= 2
    }
}

/// Every pair `(a, a + 1)` of prime powers with `a + 1 <= n`; 1 is not a
/// prime power.
pub fn consecutive_prime_powers(
    n: u64,
    options: &SearchOptions,
) -> Result<ScanReport<PrimePowerPair>, SearchError> {
    check_bound(n, 3)?;
    ScanReport::timed("consecutive_prime_powers", n, options, || {
        let sieve = SegmentedSieve::new(n, options.segment_size);
        let segment = options.segment_size.max(1);
        parallel_chunks(2, n - 1, options, |lo, hi| {
            let mut found = Vec::new();
            let mut start = lo;
            let mut flags: Vec<Option<(u64, u32)>> = Vec::new();
            while start <= hi {
                let end = hi.min(start + segment - 1);
                // one extra slot so the last a sees a + 1
                prime_power_flags(&sieve, start, end + 1, &mut flags);
                for a in start..=end {
                    let i = (a - start) as usize;
                    if let (Some((p, e)), Some((q, f))) = (flags[i], flags[i + 1]) {
                        found.push(PrimePowerPair {
                            a,
                            b: a + 1,
                            a_prime: p,
                            a_exponent: e,
                            b_prime: q,
                            b_exponent: f,
                        });
                    }
                }
                start = end + 1;
            }
            Ok(found)
        })
    })
}

/// `flags[m - lo] = Some((p, k))` iff `m = p^k`, for `m` in `[lo, hi]`.
fn prime_power_flags(
    sieve: &SegmentedSieve,
    lo: u64,
    hi: u64,
    flags: &mut Vec<Option<(u64, u32)>>,
) {
    flags.clear();
    flags.resize((hi - lo + 1) as usize, None);
    sieve.for_each_prime(lo, hi, |p| flags[(p - lo) as usize] = Some((p, 1)));
    for &p in sieve.base_primes() {
        let (mut q, mut k) = (p * p, 2);
        while q <= hi {
            if q >= lo {
                flags[(q - lo) as usize] = Some((p, k));
            }
            match q.checked_mul(p) {
                Some(next) => q = next,
                None => break,
            }
            k += 1;
        }
    }
}
