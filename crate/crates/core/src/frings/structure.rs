use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::fields::PolyFp;
use crate::groups::{direct_sum_all, AbelianGroup};
use crate::nt::{factor, gcd, lcm};

use super::ring::{FiniteRing, RingValue};
use super::spec::RingSpec;
use super::{RingError, RingOptions};

/// A finite commutative local ring, up to isomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LocalRing {
    /// `F_{p^r}`.
    Field { p: u64, r: u32 },
    /// `Z/p^k` with `k >= 2`.
    IntegersModPrimePower { p: u64, k: u32 },
    /// `F_{p^r}[t]/(t^e)` with `e >= 2`.
    Truncated { p: u64, r: u32, e: u32 },
    /// `Z/4[x]/(2x, x^2 - 2)`.
    Ps6,
}

impl LocalRing {
    pub fn order(&self) -> u128 {
        match *self {
            LocalRing::Field { p, r } => (p as u128).pow(r),
            LocalRing::IntegersModPrimePower { p, k } => (p as u128).pow(k),
            LocalRing::Truncated { p, r, e } => (p as u128).pow(r * e),
            LocalRing::Ps6 => 8,
        }
    }

    pub fn characteristic(&self) -> u64 {
        match *self {
            LocalRing::Field { p, .. } | LocalRing::Truncated { p, .. } => p,
            LocalRing::IntegersModPrimePower { p, k } => p.pow(k),
            LocalRing::Ps6 => 4,
        }
    }

    pub fn is_field(&self) -> bool {
        matches!(self, LocalRing::Field { .. })
    }

    /// Unit group by closed formula.
    pub fn unit_group(&self) -> Result<AbelianGroup, RingError> {
        let overflow = || RingError::ResourceLimit(format!("{self} is too large"));
        match *self {
            LocalRing::Field { p, r } => {
                let q = p.checked_pow(r).ok_or_else(overflow)?;
                Ok(AbelianGroup::cyclic(q - 1))
            }
            LocalRing::IntegersModPrimePower { p: 2, k } => {
                if k == 2 {
                    Ok(AbelianGroup::cyclic(2))
                } else {
                    let top = 2u64.checked_pow(k - 2).ok_or_else(overflow)?;
                    Ok(AbelianGroup::from_cyclic_orders(&[2, top]))
                }
            }
            LocalRing::IntegersModPrimePower { p, k } => {
                let pk1 = p.checked_pow(k - 1).ok_or_else(overflow)?;
                Ok(AbelianGroup::cyclic(
                    pk1.checked_mul(p - 1).ok_or_else(overflow)?,
                ))
            }
            // 1 + tF is isomorphic to the additive group of F when t^2 = 0
            LocalRing::Truncated { p, r, e: 2 } => {
                let q = p.checked_pow(r).ok_or_else(overflow)?;
                let mut orders = vec![q - 1];
                orders.extend(std::iter::repeat(p).take(r as usize));
                Ok(AbelianGroup::from_cyclic_orders(&orders))
            }
            LocalRing::Truncated { p: 2, r: 1, e: 3 } | LocalRing::Ps6 => {
                Ok(AbelianGroup::cyclic(4))
            }
            LocalRing::Truncated { .. } => Err(RingError::Unsupported(format!(
                "no unit group formula for {self}"
            ))),
        }
    }
}

impl fmt::Display for LocalRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            LocalRing::Field { p, r } => write!(f, "F_{}", (p as u128).pow(r)),
            LocalRing::IntegersModPrimePower { p, k } => write!(f, "Z_{}", (p as u128).pow(k)),
            LocalRing::Truncated { p, r, e } => {
                write!(f, "F_{}[x]/(x^{e})", (p as u128).pow(r))
            }
            LocalRing::Ps6 => write!(f, "Z_4[x]/(2x, x^2 - 2)"),
        }
    }
}

/// The prime-power moduli of `Z/n = Z/p_1^k_1 x ... x Z/p_m^k_m`, by
/// increasing prime.
pub fn crt_decompose(n: u64) -> Result<Vec<u64>, RingError> {
    if n < 2 {
        return Err(RingError::InvalidInput(format!("Z/{n} needs n >= 2")));
    }
    Ok(factor(n)?.factors.iter().map(|&(p, k)| p.pow(k)).collect())
}

/// Decomposition into local rings, in factor order.
///
/// `GF(p^s)[x]/(g^e)` with `g` irreducible of degree `d` over `F_p` splits
/// into `gcd(s, d)` copies of `F_{p^lcm(s, d)}[t]/(t^e)`.
pub fn local_factors(spec: &RingSpec) -> Result<Vec<LocalRing>, RingError> {
    let mut out = Vec::new();
    for atom in spec.factors() {
        match atom {
            RingSpec::ZMod(n) => {
                for (p, k) in factor(*n)?.factors {
                    out.push(if k == 1 {
                        LocalRing::Field { p, r: 1 }
                    } else {
                        LocalRing::IntegersModPrimePower { p, k }
                    });
                }
            }
            RingSpec::Gf(q) => {
                let (p, r) = crate::nt::as_prime_power(*q).expect("validated spec");
                out.push(LocalRing::Field { p, r });
            }
            RingSpec::PolyQuot { base, modulus } => {
                let (p, s) = (base.characteristic(), base.degree());
                for (g, e) in PolyFp::new(p, modulus.iter().copied()).factor() {
                    let d = g.degree().expect("nonzero factor") as u64;
                    let copies = gcd(s as u64, d);
                    let r = lcm(s as u64, d) as u32;
                    for _ in 0..copies {
                        out.push(if e == 1 {
                            LocalRing::Field { p, r }
                        } else {
                            LocalRing::Truncated { p, r, e }
                        });
                    }
                }
            }
            RingSpec::Ps6 => out.push(LocalRing::Ps6),
            RingSpec::Product(_) => unreachable!("products are flattened"),
        }
    }
    Ok(out)
}

/// True iff the spec is a single local ring.
pub fn is_primary(spec: &RingSpec) -> Result<bool, RingError> {
    Ok(!spec.is_product() && local_factors(spec)?.len() == 1)
}

/// Unit group by closed formulas on the local factors.
pub fn units_structural(spec: &RingSpec) -> Result<AbelianGroup, RingError> {
    let groups = local_factors(spec)?
        .iter()
        .map(LocalRing::unit_group)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(direct_sum_all(&groups))
}

fn ring_within_cap(spec: &RingSpec, options: &RingOptions) -> Result<FiniteRing, RingError> {
    let order = spec.order()?;
    if order > options.brute_force_cap {
        return Err(RingError::ResourceLimit(format!(
            "{spec} has {order} elements, above the brute-force cap of {}",
            options.brute_force_cap
        )));
    }
    FiniteRing::new(spec)
}

/// All elements in enumeration order.
pub fn enumerate_elements<'s>(
    spec: &'s RingSpec,
    options: &RingOptions,
) -> Result<Vec<RingValue<'s>>, RingError> {
    let ring = ring_within_cap(spec, options)?;
    Ok(ring.elements().map(|i| ring.value(spec, i)).collect())
}

/// Unit group of an already built ring, from element-order counts.
pub fn ring_units(ring: &FiniteRing) -> Result<(Vec<u64>, AbelianGroup), RingError> {
    let mut units = Vec::new();
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    for (i, o) in ring.unit_orders().into_iter().enumerate() {
        if let Some(o) = o {
            units.push(i as u64);
            *counts.entry(o as u64).or_default() += 1;
        }
    }
    let group = AbelianGroup::from_order_counts(&counts)?;
    Ok((units, group))
}

/// Units found by exhaustive search, with the group they form.
pub fn units_bruteforce<'s>(
    spec: &'s RingSpec,
    options: &RingOptions,
) -> Result<(Vec<RingValue<'s>>, AbelianGroup), RingError> {
    let ring = ring_within_cap(spec, options)?;
    let (units, group) = ring_units(&ring)?;
    Ok((
        units.into_iter().map(|i| ring.value(spec, i)).collect(),
        group,
    ))
}

/// All `e` with `e^2 = e`, in enumeration order.
pub fn idempotents<'s>(
    spec: &'s RingSpec,
    options: &RingOptions,
) -> Result<Vec<RingValue<'s>>, RingError> {
    let ring = ring_within_cap(spec, options)?;
    Ok(ring
        .idempotents()
        .into_iter()
        .map(|i| ring.value(spec, i))
        .collect())
}

/// True iff the only idempotents are 0 and 1.
pub fn is_indecomposable_ring(spec: &RingSpec, options: &RingOptions) -> Result<bool, RingError> {
    Ok(ring_within_cap(spec, options)?.idempotents().len() == 2)
}
