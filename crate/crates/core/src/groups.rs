//! Finite abelian groups in invariant-factor form.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::nt::{as_prime_power, factor, gcd};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("invalid invariant factors: {0}")]
    InvalidFactors(String),
    #[error("inconsistent element-order counts: {0}")]
    Inconsistent(String),
}

/// A finite abelian group `C_{d_1} x ... x C_{d_k}` with `d_i | d_{i+1}`
/// and every `d_i >= 2`. The empty list is the trivial group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct AbelianGroup {
    invariant_factors: Vec<u64>,
}

/// Cyclic prime-power summands grouped by prime, exponents descending.
pub type PrimaryDecomposition = Vec<(u64, Vec<u32>)>;

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup::default()
    }

    pub fn cyclic(n: u64) -> Self {
        assert!(n >= 1, "cyclic group order must be positive");
        if n == 1 {
            AbelianGroup::trivial()
        } else {
            AbelianGroup {
                invariant_factors: vec![n],
            }
        }
    }

    /// Validates an already-normalized divisibility chain.
    pub fn from_invariant_factors(factors: Vec<u64>) -> Result<Self, GroupError> {
        if let Some(&d) = factors.iter().find(|&&d| d < 2) {
            return Err(GroupError::InvalidFactors(format!("factor {d} < 2")));
        }
        if let Some(w) = factors.windows(2).find(|w| w[1] % w[0] != 0) {
            return Err(GroupError::InvalidFactors(format!(
                "{} does not divide {}",
                w[0], w[1]
            )));
        }
        Ok(AbelianGroup {
            invariant_factors: factors,
        })
    }

    /// Normal form of an arbitrary direct sum of cyclic groups `C_{n_i}`.
    pub fn from_cyclic_orders(orders: &[u64]) -> Self {
        let mut by_prime: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for &n in orders {
            assert!(n >= 1, "cyclic group order must be positive");
            for (p, e) in factor(n).expect("u64 factoring").factors {
                by_prime.entry(p).or_default().push(e);
            }
        }
        Self::from_primary(by_prime.into_iter().collect())
    }

    /// Recombines a primary decomposition into invariant factors.
    ///
    /// Panics if an invariant factor does not fit in 64 bits.
    pub fn from_primary(parts: PrimaryDecomposition) -> Self {
        let rank = parts.iter().map(|(_, es)| es.len()).max().unwrap_or(0);
        // d_k is the product of the largest p-power for each p, d_{k-1} the
        // next largest, and so on
        let mut factors = vec![1u64; rank];
        for (p, mut exps) in parts {
            exps.sort_unstable_by(|a, b| b.cmp(a));
            for (slot, e) in factors.iter_mut().rev().zip(exps) {
                *slot = p
                    .checked_pow(e)
                    .and_then(|q| slot.checked_mul(q))
                    .expect("invariant factor overflows u64");
            }
        }
        factors.retain(|&d| d > 1);
        AbelianGroup {
            invariant_factors: factors,
        }
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.invariant_factors
    }

    pub fn order(&self) -> u128 {
        self.invariant_factors.iter().map(|&d| d as u128).product()
    }

    /// Largest element order.
    pub fn exponent(&self) -> u64 {
        self.invariant_factors.last().copied().unwrap_or(1)
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn is_cyclic(&self) -> bool {
        self.invariant_factors.len() <= 1
    }

    /// Trivial, or cyclic of prime-power order.
    pub fn is_indecomposable(&self) -> bool {
        match self.invariant_factors.as_slice() {
            [] => true,
            [d] => as_prime_power(*d).is_some(),
            _ => false,
        }
    }

    pub fn primary_decomposition(&self) -> PrimaryDecomposition {
        let mut by_prime: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for &d in &self.invariant_factors {
            for (p, e) in factor(d).expect("u64 factoring").factors {
                by_prime.entry(p).or_default().push(e);
            }
        }
        by_prime
            .into_iter()
            .map(|(p, mut es)| {
                es.sort_unstable_by(|a, b| b.cmp(a));
                (p, es)
            })
            .collect()
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        let mut merged: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for (p, es) in self
            .primary_decomposition()
            .into_iter()
            .chain(other.primary_decomposition())
        {
            merged.entry(p).or_default().extend(es);
        }
        Self::from_primary(merged.into_iter().collect())
    }

    /// Number of elements of each order, computed from the primary type.
    pub fn order_counts(&self) -> BTreeMap<u64, u64> {
        let mut counts = BTreeMap::from([(1u64, 1u64)]);
        for (p, exps) in self.primary_decomposition() {
            let top = exps[0];
            // elements of order dividing p^j number p^{sum min(e, j)}
            let killed = |j: u32| -> u64 { p.pow(exps.iter().map(|&e| e.min(j)).sum()) };
            let mut local = Vec::new();
            for j in 0..=top {
                let exact = killed(j) - if j == 0 { 0 } else { killed(j - 1) };
                local.push((p.pow(j), exact));
            }
            let mut next = BTreeMap::new();
            for (&d, &c) in &counts {
                for &(pj, cj) in &local {
                    *next.entry(d * pj).or_insert(0) += c * cj;
                }
            }
            counts = next;
        }
        counts
    }

    /// Reconstructs the group from the number of elements of each order.
    pub fn from_order_counts(counts: &BTreeMap<u64, u64>) -> Result<Self, GroupError> {
        let counts: BTreeMap<u64, u64> = counts
            .iter()
            .filter(|&(_, &c)| c > 0)
            .map(|(&d, &c)| (d, c))
            .collect();
        if counts.get(&1) != Some(&1) {
            return Err(GroupError::Inconsistent(
                "exactly one element must have order 1".into(),
            ));
        }
        if counts.contains_key(&0) {
            return Err(GroupError::Inconsistent("order 0 is not an order".into()));
        }
        let total: u64 = counts.values().sum();
        let mut parts = Vec::new();
        for (p, a) in factor(total).expect("u64 factoring").factors {
            // c_j = #{x : x^{p^j} = 1}; these lie in the p-part
            let dividing = |j: u32| -> u64 {
                let pj = p.pow(j);
                counts
                    .iter()
                    .filter(|&(&d, _)| pj % d == 0)
                    .map(|(_, &c)| c)
                    .sum()
            };
            let mut logs = vec![0u32];
            let mut j = 0;
            while *logs.last().unwrap() < a {
                j += 1;
                if j > a {
                    return Err(GroupError::Inconsistent(format!(
                        "{p}-part never reaches order {p}^{a}"
                    )));
                }
                let c = dividing(j);
                let log = exact_log(c, p).ok_or_else(|| {
                    GroupError::Inconsistent(format!(
                        "{c} elements of order dividing {p}^{j} is not a power of {p}"
                    ))
                })?;
                logs.push(log);
            }
            // r_j = #{summands with exponent >= j}
            let ranks: Vec<u32> = logs.windows(2).map(|w| w[1] - w[0]).collect();
            if ranks.windows(2).any(|w| w[1] > w[0]) {
                return Err(GroupError::Inconsistent(format!(
                    "{p}-ranks are not non-increasing"
                )));
            }
            let mut exps = Vec::new();
            for (j, &r) in ranks.iter().enumerate() {
                let next = ranks.get(j + 1).copied().unwrap_or(0);
                for _ in next..r {
                    exps.push(j as u32 + 1);
                }
            }
            exps.sort_unstable_by(|a, b| b.cmp(a));
            parts.push((p, exps));
        }
        let group = Self::from_primary(parts);
        if group.order_counts() != counts {
            return Err(GroupError::Inconsistent(
                "no abelian group has these element-order counts".into(),
            ));
        }
        Ok(group)
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.invariant_factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .invariant_factors
            .iter()
            .map(|d| format!("C_{d}"))
            .collect();
        write!(f, "{}", parts.join(" x "))
    }
}

fn exact_log(mut n: u64, p: u64) -> Option<u32> {
    let mut k = 0;
    while n > 1 {
        if n % p != 0 {
            return None;
        }
        n /= p;
        k += 1;
    }
    (n == 1).then_some(k)
}

/// Direct sum of any number of groups.
pub fn direct_sum_all<'a>(groups: impl IntoIterator<Item = &'a AbelianGroup>) -> AbelianGroup {
    groups
        .into_iter()
        .fold(AbelianGroup::trivial(), |acc, g| acc.direct_sum(g))
}

/// True when `gcd(a, b) = 1`, the case where `C_a x C_b = C_ab`.
pub fn coprime(a: u64, b: u64) -> bool {
    gcd(a, b) == 1
}
