use std::fmt;

use crate::fields::{build_field, FieldElement, FiniteField};

use super::spec::{Base, RingSpec};
use super::RingError;

/// Canonical encoding of a ring element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Payload {
    /// An element of `Z/n`.
    Residue(u64),
    /// Coefficients, lowest degree first: prime-field residues for `GF(q)`,
    /// base-field element indices for a polynomial quotient.
    Coeffs(Vec<u64>),
    /// `a + bx` with `a` in `Z/4`, `b` in `Z/2`.
    Ps6 {
        a: u64,
        b: u64,
    },
    Tuple(Vec<Payload>),
}

impl fmt::Display for Payload {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Payload::Residue(r) => write!(f, "{r}"),
            Payload::Coeffs(cs) => {
                write!(f, "[")?;
                for (i, c) in cs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "]")
            }
            Payload::Ps6 { a, b } => match (a, b) {
                (_, 0) => write!(f, "{a}"),
                (0, _) => write!(f, "x"),
                _ => write!(f, "{a} + x"),
            },
            Payload::Tuple(parts) => {
                write!(f, "(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// An element of the ring described by `spec`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingValue<'s> {
    pub spec: &'s RingSpec,
    /// Position in enumeration order.
    pub index: u64,
    pub payload: Payload,
}

impl fmt::Display for RingValue<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.payload.fmt(f)
    }
}

#[derive(Debug, Clone)]
enum Component {
    ZMod(u64),
    Gf(FiniteField),
    /// `field[x]/(modulus)` with a monic modulus of degree `d`.
    Quot {
        field: FiniteField,
        modulus: Vec<FieldElement>,
        d: usize,
    },
    Ps6,
}

const MAX_QUOT_DEGREE: usize = 64;

impl Component {
    fn new(spec: &RingSpec) -> Result<Self, RingError> {
        let field_of = |q: u64| -> Result<FiniteField, RingError> {
            let (p, r) = crate::nt::as_prime_power(q)
                .ok_or_else(|| RingError::InvalidInput(format!("{q} is not a prime power")))?;
            Ok(build_field(p, r)?)
        };
        Ok(match spec {
            RingSpec::ZMod(n) => Component::ZMod(*n),
            RingSpec::Gf(q) => Component::Gf(field_of(*q)?),
            RingSpec::PolyQuot { base, modulus } => {
                let field = match base {
                    Base::ZMod(p) => field_of(*p)?,
                    Base::Gf(q) => field_of(*q)?,
                };
                let modulus: Vec<FieldElement> =
                    modulus.iter().map(|&c| field.from_int(c)).collect();
                let d = modulus.len() - 1;
                if d > MAX_QUOT_DEGREE {
                    return Err(RingError::ResourceLimit(format!(
                        "modulus degree {d} is too large"
                    )));
                }
                Component::Quot { field, modulus, d }
            }
            RingSpec::Ps6 => Component::Ps6,
            RingSpec::Product(_) => unreachable!("products are flattened"),
        })
    }

    fn one(&self) -> u64 {
        1
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        match self {
            Component::ZMod(n) => ((a as u128 + b as u128) % *n as u128) as u64,
            Component::Gf(f) => f.add(FieldElement(a), FieldElement(b)).0,
            Component::Quot { field, d, .. } => {
                let q = field.order();
                let (mut x, mut y) = (a, b);
                let mut out = 0u64;
                let mut place = 1u64;
                for i in 0..*d {
                    let c = field.add(FieldElement(x % q), FieldElement(y % q)).0;
                    out += c * place;
                    x /= q;
                    y /= q;
                    if i + 1 < *d {
                        place *= q;
                    }
                }
                out
            }
            Component::Ps6 => ((a % 4 + b % 4) % 4) + 4 * ((a / 4 + b / 4) % 2),
        }
    }

    fn neg(&self, a: u64) -> u64 {
        match self {
            Component::ZMod(n) => (n - a) % n,
            Component::Gf(f) => f.neg(FieldElement(a)).0,
            Component::Quot { field, d, .. } => {
                let q = field.order();
                let mut x = a;
                let mut out = 0u64;
                let mut place = 1u64;
                for i in 0..*d {
                    out += field.neg(FieldElement(x % q)).0 * place;
                    x /= q;
                    if i + 1 < *d {
                        place *= q;
                    }
                }
                out
            }
            Component::Ps6 => (4 - a % 4) % 4 + 4 * (a / 4),
        }
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        match self {
            Component::ZMod(n) => crate::nt::mul_mod(a, b, *n),
            Component::Gf(f) => f.mul(FieldElement(a), FieldElement(b)).0,
            Component::Quot { field, modulus, d } => quot_mul(field, modulus, *d, a, b),
            Component::Ps6 => {
                let (a0, a1, b0, b1) = (a % 4, a / 4, b % 4, b / 4);
                // 2x = 0 and x^2 = 2
                let c0 = (a0 * b0 + 2 * a1 * b1) % 4;
                let c1 = (a0 * b1 + a1 * b0) % 2;
                c0 + 4 * c1
            }
        }
    }

    fn payload(&self, a: u64) -> Payload {
        match self {
            Component::ZMod(_) => Payload::Residue(a),
            Component::Gf(f) => Payload::Coeffs(f.coeffs(FieldElement(a))),
            Component::Quot { field, d, .. } => {
                let q = field.order();
                let mut x = a;
                Payload::Coeffs(
                    (0..*d)
                        .map(|_| {
                            let c = x % q;
                            x /= q;
                            c
                        })
                        .collect(),
                )
            }
            Component::Ps6 => Payload::Ps6 { a: a % 4, b: a / 4 },
        }
    }
}

fn quot_mul(field: &FiniteField, modulus: &[FieldElement], d: usize, a: u64, b: u64) -> u64 {
    let q = field.order();
    let zero = FieldElement(0);
    let mut xa = [zero; MAX_QUOT_DEGREE];
    let mut xb = [zero; MAX_QUOT_DEGREE];
    let (mut ra, mut rb) = (a, b);
    for i in 0..d {
        xa[i] = FieldElement(ra % q);
        xb[i] = FieldElement(rb % q);
        ra /= q;
        rb /= q;
    }
    let mut prod = [zero; 2 * MAX_QUOT_DEGREE];
    for i in 0..d {
        if xa[i] == zero {
            continue;
        }
        for j in 0..d {
            if xb[j] != zero {
                prod[i + j] = field.add(prod[i + j], field.mul(xa[i], xb[j]));
            }
        }
    }
    // the modulus is monic
    for k in (d..(2 * d).saturating_sub(1)).rev() {
        let c = prod[k];
        if c == zero {
            continue;
        }
        for (j, &m) in modulus.iter().enumerate().take(d) {
            if m != zero {
                prod[k - d + j] = field.sub(prod[k - d + j], field.mul(c, m));
            }
        }
        prod[k] = zero;
    }
    let mut out = 0u64;
    for i in (0..d).rev() {
        out = out * q + prod[i].0;
    }
    out
}

/// A finite ring with elements encoded as indices `0..order`.
///
/// Index 0 is zero. A product is encoded in mixed radix with the first
/// factor most significant; within a factor, lower-degree coefficients
/// are less significant.
#[derive(Debug, Clone)]
pub struct FiniteRing {
    spec: RingSpec,
    components: Vec<Component>,
    radices: Vec<u64>,
    order: u64,
    one: u64,
}

impl FiniteRing {
    pub fn new(spec: &RingSpec) -> Result<Self, RingError> {
        let order = spec.order()?;
        let components = spec
            .factors()
            .iter()
            .map(Component::new)
            .collect::<Result<Vec<_>, _>>()?;
        let radices = spec
            .factors()
            .iter()
            .map(|f| f.order())
            .collect::<Result<Vec<_>, _>>()?;
        let mut ring = FiniteRing {
            spec: spec.clone(),
            components,
            radices,
            order,
            one: 0,
        };
        let ones: Vec<u64> = ring.components.iter().map(Component::one).collect();
        ring.one = ring.encode(&ones);
        Ok(ring)
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn zero(&self) -> u64 {
        0
    }

    pub fn one(&self) -> u64 {
        self.one
    }

    fn decode(&self, mut a: u64, out: &mut [u64]) {
        for (slot, &n) in out.iter_mut().zip(&self.radices).rev() {
            *slot = a % n;
            a /= n;
        }
    }

    fn encode(&self, parts: &[u64]) -> u64 {
        parts
            .iter()
            .zip(&self.radices)
            .fold(0, |acc, (&x, &n)| acc * n + x)
    }

    fn lift2(&self, a: u64, b: u64, op: impl Fn(&Component, u64, u64) -> u64) -> u64 {
        if let [c] = self.components.as_slice() {
            return op(c, a, b);
        }
        let k = self.components.len();
        let mut xs = vec![0; k];
        let mut ys = vec![0; k];
        self.decode(a, &mut xs);
        self.decode(b, &mut ys);
        for i in 0..k {
            xs[i] = op(&self.components[i], xs[i], ys[i]);
        }
        self.encode(&xs)
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        self.lift2(a, b, Component::add)
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.lift2(a, b, Component::mul)
    }

    pub fn neg(&self, a: u64) -> u64 {
        self.lift2(a, 0, |c, x, _| c.neg(x))
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut acc = self.one;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn payload(&self, a: u64) -> Payload {
        if let [c] = self.components.as_slice() {
            return c.payload(a);
        }
        let mut parts = vec![0; self.components.len()];
        self.decode(a, &mut parts);
        Payload::Tuple(
            self.components
                .iter()
                .zip(parts)
                .map(|(c, x)| c.payload(x))
                .collect(),
        )
    }

    pub fn value<'s>(&self, spec: &'s RingSpec, index: u64) -> RingValue<'s> {
        RingValue {
            spec,
            index,
            payload: self.payload(index),
        }
    }

    pub fn elements(&self) -> std::ops::Range<u64> {
        0..self.order
    }

    pub fn idempotents(&self) -> Vec<u64> {
        self.elements().filter(|&e| self.mul(e, e) == e).collect()
    }

    /// Multiplicative order of every element, `None` for nonunits.
    ///
    /// Each power run classifies the whole cyclic subgroup it visits.
    pub fn unit_orders(&self) -> Vec<Option<u32>> {
        const UNKNOWN: u32 = 0;
        const NONUNIT: u32 = u32::MAX;
        let n = self.order as usize;
        let mut order = vec![UNKNOWN; n];
        let mut stamp = vec![0u32; n];
        let mut run: Vec<u64> = Vec::new();
        for (run_id, a) in (1u32..).zip(0..self.order) {
            if order[a as usize] != UNKNOWN {
                continue;
            }
            run.clear();
            let mut x = a;
            let is_unit = loop {
                run.push(x);
                stamp[x as usize] = run_id;
                if x == self.one {
                    break true;
                }
                x = self.mul(x, a);
                if order[x as usize] == NONUNIT || stamp[x as usize] == run_id {
                    break false;
                }
            };
            if is_unit {
                let k = run.len() as u64;
                for (j, &y) in (1u64..).zip(&run) {
                    order[y as usize] = (k / crate::nt::gcd(j, k)) as u32;
                }
            } else {
                for &y in &run {
                    order[y as usize] = NONUNIT;
                }
            }
        }
        order
            .into_iter()
            .map(|o| (o != NONUNIT).then_some(o))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frings::parse_ring_spec;

    fn ring(s: &str) -> FiniteRing {
        FiniteRing::new(&parse_ring_spec(s).unwrap()).unwrap()
    }

    #[test]
    fn ps6_relations() {
        let r = ring("Z/4[x]/(2x,x^2-2)");
        let x = 4;
        assert_eq!(r.order(), 8);
        assert_eq!(r.add(x, x), 0);
        assert_eq!(r.mul(2, x), 0);
        assert_eq!(r.mul(x, x), 2);
        assert_eq!(r.payload(5), Payload::Ps6 { a: 1, b: 1 });
    }

    #[test]
    fn quotient_matches_field() {
        // F_2[x]/(x^3 + x + 1) is the field of order 8 with the same encoding
        let quot = ring("Z/2[x]/(x^3 + x + 1)");
        let field = ring("GF(8)");
        for a in 0..8 {
            for b in 0..8 {
                assert_eq!(quot.mul(a, b), field.mul(a, b));
                assert_eq!(quot.add(a, b), field.add(a, b));
            }
        }
    }

    #[test]
    fn ring_axioms_on_small_rings() {
        for s in [
            "Z/6",
            "GF(4)[x]/(x^2 + 1)",
            "Z/3[x]/(x^3)",
            "Z/4[x]/(2x,x^2-2)",
            "Z/2 * GF(4) * Z/3",
        ] {
            let r = ring(s);
            let n = r.order();
            for a in 0..n {
                assert_eq!(r.mul(a, r.one()), a, "{s}");
                assert_eq!(r.add(a, r.neg(a)), 0, "{s}");
                for b in 0..n {
                    assert_eq!(r.mul(a, b), r.mul(b, a), "{s}");
                    for c in [0, 1, n / 2, n - 1] {
                        assert_eq!(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c)), "{s}");
                        assert_eq!(
                            r.mul(a, r.add(b, c)),
                            r.add(r.mul(a, b), r.mul(a, c)),
                            "{s}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn product_encoding_is_mixed_radix() {
        let r = ring("Z/2 * Z/3");
        assert_eq!(r.one(), 4);
        assert_eq!(
            r.payload(5),
            Payload::Tuple(vec![Payload::Residue(1), Payload::Residue(2)])
        );
    }

    #[test]
    fn unit_orders_of_z8() {
        let orders = ring("Z/8").unit_orders();
        assert_eq!(
            orders,
            vec![None, Some(1), None, Some(2), None, Some(2), None, Some(2)]
        );
    }
}
