use num_bigint::BigUint;

use crate::nt::{factor, is_prime, mul_mod};

use super::poly_fp::PolyFp;
use super::{render_poly, FieldError};

/// Default ceiling on `p^r` for [`build_field`].
pub const DEFAULT_FIELD_ORDER_LIMIT: u64 = 1 << 40;

const MAX_DEGREE: usize = 63;

/// `F_{p^r}` realized as `F_p[x]/(m)` for a monic irreducible `m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteField {
    p: u64,
    r: u32,
    modulus: PolyFp,
    order: u64,
}

/// An element of some [`FiniteField`], encoded as the integer
/// `c_0 + c_1 p + ... + c_{r-1} p^{r-1}` of its coefficient vector.
/// Elements carry no reference to their field; operations go through the
/// field value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(pub u64);

/// Builds `F_{p^r}` with the first monic irreducible of degree `r` in
/// lexicographic order (highest coefficient first).
pub fn build_field(p: u64, r: u32) -> Result<FiniteField, FieldError> {
    build_field_with_limit(p, r, DEFAULT_FIELD_ORDER_LIMIT)
}

pub fn build_field_with_limit(p: u64, r: u32, limit: u64) -> Result<FiniteField, FieldError> {
    if !is_prime(p) {
        return Err(FieldError::InvalidInput(format!("{p} is not prime")));
    }
    if r == 0 {
        return Err(FieldError::InvalidInput("degree must be at least 1".into()));
    }
    let order = p
        .checked_pow(r)
        .filter(|&q| q <= limit && r as usize <= MAX_DEGREE)
        .ok_or_else(|| {
            FieldError::ResourceLimit(format!("{p}^{r} exceeds the field order limit {limit}"))
        })?;
    let modulus = (0..order)
        .map(|idx| PolyFp::monic_from_index(p, r as usize, idx))
        .find(PolyFp::is_irreducible)
        .expect("an irreducible of every degree exists");
    Ok(FiniteField {
        p,
        r,
        modulus,
        order,
    })
}

impl FiniteField {
    /// A field from an explicit modulus, which must be monic irreducible.
    pub fn with_modulus(modulus: PolyFp) -> Result<Self, FieldError> {
        let p = modulus.characteristic();
        if !is_prime(p) {
            return Err(FieldError::InvalidInput(format!("{p} is not prime")));
        }
        if !modulus.is_monic() || !modulus.is_irreducible() {
            return Err(FieldError::InvalidInput(format!(
                "{modulus} is not monic irreducible over F_{p}"
            )));
        }
        let r = modulus.degree().unwrap() as u32;
        let order = p
            .checked_pow(r)
            .ok_or_else(|| FieldError::ResourceLimit(format!("{p}^{r} does not fit in 64 bits")))?;
        Ok(FiniteField {
            p,
            r,
            modulus,
            order,
        })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.r
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn modulus(&self) -> &PolyFp {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// The image of an integer in the prime subfield.
    pub fn from_int(&self, c: u64) -> FieldElement {
        FieldElement(c % self.p)
    }

    /// The class of `x` in `F_p[x]/(m)`. For the prime field the modulus is
    /// `x` itself, so this is zero.
    pub fn root(&self) -> FieldElement {
        if self.r == 1 {
            FieldElement(0)
        } else {
            FieldElement(self.p)
        }
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement, FieldError> {
        if coeffs.len() > self.r as usize {
            return Err(FieldError::InvalidInput(format!(
                "{} coefficients given for a degree-{} field",
                coeffs.len(),
                self.r
            )));
        }
        Ok(FieldElement(
            coeffs
                .iter()
                .rev()
                .fold(0, |acc, &c| acc * self.p + c % self.p),
        ))
    }

    pub fn coeffs(&self, a: FieldElement) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.r as usize);
        let mut v = a.0;
        for _ in 0..self.r {
            out.push(v % self.p);
            v /= self.p;
        }
        out
    }

    pub fn render(&self, a: FieldElement) -> String {
        render_poly(&self.coeffs(a), "x")
    }

    pub fn contains(&self, a: FieldElement) -> bool {
        a.0 < self.order
    }

    /// Every element in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.order).map(FieldElement)
    }

    fn digits(&self, a: FieldElement, out: &mut [u64; MAX_DEGREE]) {
        let mut v = a.0;
        for d in out.iter_mut().take(self.r as usize) {
            *d = v % self.p;
            v /= self.p;
        }
    }

    fn encode(&self, digits: &[u64]) -> FieldElement {
        FieldElement(digits.iter().rev().fold(0, |acc, &c| acc * self.p + c))
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.r == 1 {
            return FieldElement(((a.0 as u128 + b.0 as u128) % self.p as u128) as u64);
        }
        let (mut x, mut y) = ([0u64; MAX_DEGREE], [0u64; MAX_DEGREE]);
        self.digits(a, &mut x);
        self.digits(b, &mut y);
        let r = self.r as usize;
        for i in 0..r {
            x[i] = ((x[i] as u128 + y[i] as u128) % self.p as u128) as u64;
        }
        self.encode(&x[..r])
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let r = self.r as usize;
        let mut x = [0u64; MAX_DEGREE];
        self.digits(a, &mut x);
        for d in x.iter_mut().take(r) {
            *d = (self.p - *d) % self.p;
        }
        self.encode(&x[..r])
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.p;
        if self.r == 1 {
            return FieldElement(mul_mod(a.0, b.0, p));
        }
        let r = self.r as usize;
        let (mut x, mut y) = ([0u64; MAX_DEGREE], [0u64; MAX_DEGREE]);
        self.digits(a, &mut x);
        self.digits(b, &mut y);
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for i in 0..r {
            if x[i] == 0 {
                continue;
            }
            for j in 0..r {
                let t = mul_mod(x[i], y[j], p);
                prod[i + j] = ((prod[i + j] as u128 + t as u128) % p as u128) as u64;
            }
        }
        let m = self.modulus.coeffs();
        for k in (r..2 * r - 1).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for j in 0..r {
                let t = mul_mod(c, m[j], p);
                let slot = &mut prod[k - r + j];
                *slot = ((*slot as u128 + p as u128 - t as u128) % p as u128) as u64;
            }
        }
        self.encode(&prod[..r])
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut acc = self.one();
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn pow_big(&self, a: FieldElement, e: &BigUint) -> FieldElement {
        let mut acc = self.one();
        for bit in (0..e.bits()).rev() {
            acc = self.mul(acc, acc);
            if e.bit(bit) {
                acc = self.mul(acc, a);
            }
        }
        acc
    }

    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        (a != self.zero()).then(|| self.pow(a, self.order - 2))
    }

    /// Least `k >= 1` with `a^k = 1`.
    pub fn element_order(&self, a: FieldElement) -> Result<u64, FieldError> {
        if a == self.zero() {
            return Err(FieldError::InvalidInput(
                "zero has no multiplicative order".into(),
            ));
        }
        if !self.contains(a) {
            return Err(FieldError::InvalidInput(format!(
                "{} is not in F_{}",
                a.0, self.order
            )));
        }
        let group = self.order - 1;
        let mut ord = group;
        for (l, _) in factor(group).expect("u64 factoring").factors {
            while ord % l == 0 && self.pow(a, ord / l) == self.one() {
                ord /= l;
            }
        }
        Ok(ord)
    }

    /// The first element, in encoding order, of multiplicative order
    /// `p^r - 1`.
    pub fn find_generator(&self) -> FieldElement {
        let group = self.order - 1;
        let primes: Vec<u64> = factor(group)
            .expect("u64 factoring")
            .distinct_primes()
            .collect();
        self.elements()
            .skip(1)
            .find(|&a| primes.iter().all(|&l| self.pow(a, group / l) != self.one()))
            .expect("the multiplicative group of a finite field is cyclic")
    }

    /// Whether `a` lies in the subfield of order `sub_order`.
    pub fn in_subfield(&self, a: FieldElement, sub_order: u64) -> bool {
        self.pow(a, sub_order) == a
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_moduli() {
        let f9 = build_field(3, 2).unwrap();
        assert_eq!(f9.modulus().to_string(), "x^2 + 1");
        let f2 = build_field(2, 1).unwrap();
        assert_eq!(f2.order(), 2);
        let f8 = build_field(2, 3).unwrap();
        assert_eq!(f8.modulus().to_string(), "x^3 + x + 1");
    }

    #[test]
    fn generators() {
        let f9 = build_field(3, 2).unwrap();
        let g = f9.find_generator();
        assert_eq!(f9.element_order(g).unwrap(), 8);
        assert_eq!(f9.render(g), "x + 1");
        let f3 = build_field(3, 1).unwrap();
        assert_eq!(f3.find_generator(), FieldElement(2));
        let f8 = build_field(2, 3).unwrap();
        assert_eq!(f8.find_generator(), f8.root());
        assert_eq!(f8.element_order(f8.root()).unwrap(), 7);
    }

    #[test]
    fn orders() {
        let f9 = build_field(3, 2).unwrap();
        assert_eq!(f9.element_order(f9.one()).unwrap(), 1);
        assert_eq!(f9.element_order(f9.from_int(2)).unwrap(), 2);
        assert!(f9.element_order(f9.zero()).is_err());
    }

    #[test]
    fn inverses_in_f16() {
        let f = build_field(2, 4).unwrap();
        for a in f.elements().skip(1) {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(
            build_field(4, 1),
            Err(FieldError::InvalidInput(_))
        ));
        assert!(matches!(
            build_field_with_limit(2, 20, 1000),
            Err(FieldError::ResourceLimit(_))
        ));
    }
}
