use std::fmt;

use super::arith::{gcd, mul_mod};
use super::primality::is_prime;
use super::NtError;

const TRIAL_LIMIT: u64 = 1 << 10;

/// A positive integer together with its sorted prime factorization.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization<T = u64> {
    pub value: T,
    /// `(prime, exponent)` pairs with strictly increasing primes.
    pub factors: Vec<(T, u32)>,
    /// False when some listed prime only passed a probabilistic test.
    pub proven: bool,
}

impl Factorization<u64> {
    pub fn distinct_primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Multiplies the factorization back out.
    pub fn recompose(&self) -> u64 {
        self.factors.iter().map(|&(p, e)| p.pow(e)).product()
    }

    /// Euler's totient of the factored value.
    pub fn totient(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, e)| p.pow(e - 1) * (p - 1))
            .product()
    }

    /// All positive divisors in increasing order.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for &(p, e) in &self.factors {
            let len = divs.len();
            let mut pk = 1;
            for _ in 0..e {
                pk *= p;
                for i in 0..len {
                    divs.push(divs[i] * pk);
                }
            }
        }
        divs.sort_unstable();
        divs
    }
}

impl<T: fmt::Display> fmt::Display for Factorization<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Caps on factoring work.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorLimits {
    /// Inputs above this value are refused with a resource-limit error.
    pub max_value: u64,
    /// Total Pollard rho iterations allowed per composite cofactor.
    pub rho_iterations: u64,
}

impl Default for FactorLimits {
    fn default() -> Self {
        FactorLimits {
            max_value: u64::MAX,
            rho_iterations: 1 << 26,
        }
    }
}

/// Sorted prime factorization of `n` with default limits.
pub fn factor(n: u64) -> Result<Factorization, NtError> {
    factor_with(n, &FactorLimits::default())
}

pub fn factor_with(n: u64, limits: &FactorLimits) -> Result<Factorization, NtError> {
    if n == 0 {
        return Err(NtError::InvalidInput("cannot factor 0".into()));
    }
    if n > limits.max_value {
        return Err(NtError::ResourceLimit(format!(
            "{n} exceeds the factoring bound {}",
            limits.max_value
        )));
    }
    let mut primes = Vec::new();
    let mut rest = n;
    while rest % 2 == 0 {
        primes.push(2);
        rest /= 2;
    }
    let mut d = 3;
    while d < TRIAL_LIMIT && d * d <= rest {
        while rest % d == 0 {
            primes.push(d);
            rest /= d;
        }
        d += 2;
    }
    if rest > 1 {
        let mut stack = vec![rest];
        while let Some(m) = stack.pop() {
            if m == 1 {
                continue;
            }
            if is_prime(m) {
                primes.push(m);
                continue;
            }
            let f = pollard_brent(m, limits.rho_iterations).ok_or_else(|| {
                NtError::ResourceLimit(format!("Pollard rho budget exhausted on {m}"))
            })?;
            stack.push(f);
            stack.push(m / f);
        }
    }
    primes.sort_unstable();
    let mut factors: Vec<(u64, u32)> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    Ok(Factorization {
        value: n,
        factors,
        proven: true,
    })
}

/// A nontrivial factor of the odd composite `n`, using Brent's cycle
/// detection with batched gcds. Tries successive polynomial constants.
fn pollard_brent(n: u64, budget: u64) -> Option<u64> {
    if n % 2 == 0 {
        return Some(2);
    }
    if let Some((b, _)) = super::perfect_power(n) {
        return Some(b);
    }
    const BATCH: u64 = 128;
    let mut spent = 0u64;
    for c in 1..n {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let mut y = 2u64;
        let mut r = 1u64;
        let mut q = 1u64;
        let mut g = 1u64;
        let mut x = y;
        let mut ys = y;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += BATCH;
            }
            r *= 2;
            spent += r;
            if spent > budget {
                return None;
            }
        }
        if g == n {
            // the batch overshot; step back one at a time
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return Some(g);
        }
    }
    None
}
