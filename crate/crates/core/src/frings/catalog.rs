//! Enumeration of the ring specs the grammar can express, by order.

use crate::fields::PolyFp;
use crate::nt::{as_prime_power, is_prime};

use super::spec::{Base, RingSpec};

/// Every monic polynomial over `F_p` of degree `d`, coefficients lowest first.
fn monic_polys(p: u64, d: usize) -> impl Iterator<Item = Vec<u64>> {
    let count = p.pow(d as u32);
    (0..count).map(move |i| PolyFp::monic_from_index(p, d, i).coeffs().to_vec())
}

fn quotients(base: Base, max_order: u64, max_degree: usize, out: &mut Vec<RingSpec>) {
    let q = base.order();
    let p = base.characteristic();
    let mut order = q;
    let mut d = 1;
    while order <= max_order && d <= max_degree {
        for m in monic_polys(p, d) {
            out.push(RingSpec::PolyQuot {
                base: base.clone(),
                modulus: m,
            });
        }
        d += 1;
        order = match order.checked_mul(q) {
            Some(o) => o,
            None => break,
        };
    }
}

/// Every non-product spec of order at most `max_order`: `Z/n`, `GF(q)`,
/// the PS6 literal and every quotient of `Z/p[x]` and `GF(q)[x]` by a
/// monic modulus. Sorted by order, then by spec.
pub fn atoms(max_order: u64) -> Vec<RingSpec> {
    let mut out = Vec::new();
    for n in 2..=max_order {
        out.push(RingSpec::ZMod(n));
        if let Some((p, _)) = as_prime_power(n) {
            out.push(RingSpec::Gf(n));
            if is_prime(n) {
                quotients(Base::ZMod(p), max_order, usize::MAX, &mut out);
            }
            quotients(Base::Gf(n), max_order, usize::MAX, &mut out);
        }
    }
    if max_order >= 8 {
        out.push(RingSpec::Ps6);
    }
    sort_by_order(&mut out);
    out
}

fn sort_by_order(specs: &mut [RingSpec]) {
    specs.sort_by_cached_key(|s| (s.order().unwrap_or(u64::MAX), s.clone()));
}

/// Products of at least two atoms from `atoms`, as multisets in the
/// order given, with total order at most `max_order`.
pub fn products_of(atoms: &[RingSpec], max_order: u64) -> Vec<RingSpec> {
    let orders: Vec<u64> = atoms
        .iter()
        .map(|a| a.order().unwrap_or(u64::MAX))
        .collect();
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn extend(
        start: usize,
        budget: u64,
        atoms: &[RingSpec],
        orders: &[u64],
        stack: &mut Vec<usize>,
        out: &mut Vec<RingSpec>,
    ) {
        for i in start..atoms.len() {
            if orders[i] > budget {
                // atoms are sorted by order
                if orders[i..].iter().all(|&o| o > budget) {
                    break;
                }
                continue;
            }
            stack.push(i);
            if stack.len() >= 2 {
                out.push(RingSpec::Product(
                    stack.iter().map(|&j| atoms[j].clone()).collect(),
                ));
            }
            extend(i, budget / orders[i], atoms, orders, stack, out);
            stack.pop();
        }
    }
    extend(0, max_order, atoms, &orders, &mut stack, &mut out);
    out
}

/// The grammar-expressible specs used for exhaustive scans: every atom
/// of order at most `max_order`, and every product of canonical atoms.
///
/// Product factors range over `Z/n`, `GF(q)`, PS6 and `F_q[x]/(x^e)` with
/// `e >= 2`, written over `Z/p` for prime `q`. Up to isomorphism these are
/// all the local rings the grammar can build.
pub fn expressible_specs(max_order: u64) -> Vec<RingSpec> {
    let all = atoms(max_order);
    let canonical: Vec<RingSpec> = all.iter().filter(|a| is_canonical(a)).cloned().collect();
    let mut out = all;
    out.extend(products_of(&canonical, max_order));
    out
}

fn is_canonical(atom: &RingSpec) -> bool {
    match atom {
        RingSpec::PolyQuot { base, modulus } => {
            let power_of_x =
                modulus.len() >= 3 && modulus[..modulus.len() - 1].iter().all(|&c| c == 0);
            let written_once = match base {
                Base::ZMod(_) => true,
                Base::Gf(q) => !is_prime(*q),
            };
            power_of_x && written_once
        }
        _ => true,
    }
}

/// The primary specs of order at most `max_order` up to the given
/// quotient degree: `Z/p^k`, `GF(q)`, PS6 and the primary quotients of
/// `GF(q)[x]` and `Z/p[x]`.
pub fn primary_specs(max_order: u64, max_degree: usize) -> Vec<RingSpec> {
    let mut out = Vec::new();
    for n in 2..=max_order {
        if let Some((p, _)) = as_prime_power(n) {
            out.push(RingSpec::ZMod(n));
            out.push(RingSpec::Gf(n));
            if is_prime(n) {
                quotients(Base::ZMod(p), max_order, max_degree, &mut out);
            }
            quotients(Base::Gf(n), max_order, max_degree, &mut out);
        }
    }
    if max_order >= 8 {
        out.push(RingSpec::Ps6);
    }
    out.retain(|s| super::structure::is_primary(s).unwrap_or(false));
    sort_by_order(&mut out);
    out
}
