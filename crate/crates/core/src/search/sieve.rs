use crate::nt::iroot;

/// Primes up to `limit` by the sieve of Eratosthenes.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// Segmented sieve over `[lo, hi]`, one segment of at most `segment`
/// numbers resident at a time.
#[derive(Debug, Clone)]
pub struct SegmentedSieve {
    base: Vec<u64>,
    segment: u64,
}

impl SegmentedSieve {
    /// Ready to sieve any range ending at or below `max`.
    pub fn new(max: u64, segment: u64) -> Self {
        SegmentedSieve {
            base: primes_up_to(iroot(max, 2)),
            segment: segment.max(1),
        }
    }

    /// Base primes, those up to the square root of the bound.
    pub fn base_primes(&self) -> &[u64] {
        &self.base
    }

    /// Calls `f` on every prime in `[lo, hi]` in increasing order.
    pub fn for_each_prime(&self, lo: u64, hi: u64, mut f: impl FnMut(u64)) {
        let lo = lo.max(2);
        let mut marks = Vec::new();
        let mut start = lo;
        while start <= hi {
            let end = hi.min(start.saturating_add(self.segment - 1));
            let len = (end - start + 1) as usize;
            marks.clear();
            marks.resize(len, true);
            for &p in &self.base {
                if p * p > end {
                    break;
                }
                let first = (p * p).max(start.div_ceil(p) * p);
                let mut m = first;
                while m <= end {
                    marks[(m - start) as usize] = false;
                    m += p;
                }
            }
            for (i, &is_prime) in marks.iter().enumerate() {
                if is_prime {
                    f(start + i as u64);
                }
            }
            if end == u64::MAX {
                break;
            }
            start = end + 1;
        }
    }

    pub fn primes_in(&self, lo: u64, hi: u64) -> Vec<u64> {
        let mut out = Vec::new();
        self.for_each_prime(lo, hi, |p| out.push(p));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn segments_agree_with_plain_sieve() {
        let plain = primes_up_to(10_000);
        for segment in [1, 7, 64, 1000, 1 << 16] {
            let s = SegmentedSieve::new(10_000, segment);
            assert_eq!(s.primes_in(0, 10_000), plain, "segment {segment}");
            let mid: Vec<u64> = plain
                .iter()
                .copied()
                .filter(|&p| (5000..=6000).contains(&p))
                .collect();
            assert_eq!(s.primes_in(5000, 6000), mid);
        }
        assert_eq!(primes_up_to(1), Vec::<u64>::new());
        assert_eq!(primes_up_to(2), vec![2]);
    }
}
