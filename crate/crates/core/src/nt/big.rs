//! Arbitrary-precision primality and factoring. Values that fit in a
//! machine word are routed to the exact `u64` code.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use super::factor::{factor_with, FactorLimits, Factorization};
use super::primality::is_prime;
use super::NtError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Primality {
    Prime,
    /// Passed every Miller–Rabin round; not proven.
    ProbablePrime,
    Composite,
}

impl Primality {
    pub fn is_prime_like(self) -> bool {
        !matches!(self, Primality::Composite)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BigFactorLimits {
    pub max_bits: u64,
    pub rho_iterations: u64,
    pub miller_rabin_rounds: u32,
}

impl Default for BigFactorLimits {
    fn default() -> Self {
        BigFactorLimits {
            max_bits: 160,
            rho_iterations: 1 << 24,
            miller_rabin_rounds: 32,
        }
    }
}

const SMALL_PRIMES: [u32; 40] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173,
];

/// Exact below `2^64`; above, a Miller–Rabin test with the first `rounds`
/// primes as bases.
pub fn primality(n: &BigUint, rounds: u32) -> Primality {
    if let Some(small) = n.to_u64() {
        return if is_prime(small) {
            Primality::Prime
        } else {
            Primality::Composite
        };
    }
    if n.is_even() {
        return Primality::Composite;
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s as usize;
    'witness: for &a in SMALL_PRIMES.iter().take(rounds.max(1) as usize) {
        let a = BigUint::from(a);
        if (n % &a).is_zero() {
            return Primality::Composite;
        }
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return Primality::Composite;
    }
    Primality::ProbablePrime
}

pub fn factor_big(
    n: &BigUint,
    limits: &BigFactorLimits,
) -> Result<Factorization<BigUint>, NtError> {
    if n.is_zero() {
        return Err(NtError::InvalidInput("cannot factor 0".into()));
    }
    if let Some(small) = n.to_u64() {
        let f = factor_with(
            small,
            &FactorLimits {
                rho_iterations: limits.rho_iterations.max(1 << 20),
                ..FactorLimits::default()
            },
        )?;
        return Ok(Factorization {
            value: n.clone(),
            factors: f
                .factors
                .into_iter()
                .map(|(p, e)| (BigUint::from(p), e))
                .collect(),
            proven: true,
        });
    }
    if n.bits() > limits.max_bits {
        return Err(NtError::ResourceLimit(format!(
            "{}-bit input exceeds the {}-bit factoring bound",
            n.bits(),
            limits.max_bits
        )));
    }
    let mut primes: Vec<BigUint> = Vec::new();
    let mut proven = true;
    let mut rest = n.clone();
    for &p in SMALL_PRIMES.iter() {
        let p = BigUint::from(p);
        while (&rest % &p).is_zero() {
            rest /= &p;
            primes.push(p.clone());
        }
    }
    let mut stack = vec![rest];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if let Some(small) = m.to_u64() {
            let f = factor_with(small, &FactorLimits::default())?;
            for (p, e) in f.factors {
                for _ in 0..e {
                    primes.push(BigUint::from(p));
                }
            }
            continue;
        }
        match primality(&m, limits.miller_rabin_rounds) {
            Primality::Prime => primes.push(m),
            Primality::ProbablePrime => {
                proven = false;
                primes.push(m);
            }
            Primality::Composite => {
                let f = pollard_brent_big(&m, limits.rho_iterations).ok_or_else(|| {
                    NtError::ResourceLimit(format!("Pollard rho budget exhausted on {m}"))
                })?;
                stack.push(&m / &f);
                stack.push(f);
            }
        }
    }
    primes.sort();
    let mut factors: Vec<(BigUint, u32)> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    Ok(Factorization {
        value: n.clone(),
        factors,
        proven,
    })
}

fn pollard_brent_big(n: &BigUint, budget: u64) -> Option<BigUint> {
    if n.is_even() {
        return Some(BigUint::from(2u32));
    }
    let one = BigUint::one();
    let mut spent = 0u64;
    for c in 1u32..64 {
        let c = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut x = y.clone();
        let mut ys = y.clone();
        let mut q = one.clone();
        let mut g = one.clone();
        let mut r = 1u64;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..128u64.min(r - k) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += 128;
            }
            r *= 2;
            spent += r;
            if spent > budget {
                return None;
            }
        }
        if &g == n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != n {
            return Some(g);
        }
    }
    None
}
