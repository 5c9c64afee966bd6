//! Dense univariate polynomials over a prime field `F_p`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::nt::{factor, inv_mod, mul_mod};

use super::render_poly;

/// A polynomial over `F_p`, coefficients stored lowest degree first with no
/// trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyFp {
    p: u64,
    coeffs: Vec<u64>,
}

impl PolyFp {
    pub fn new(p: u64, coeffs: impl IntoIterator<Item = u64>) -> Self {
        let mut poly = PolyFp {
            p,
            coeffs: coeffs.into_iter().map(|c| c % p).collect(),
        };
        poly.trim();
        poly
    }

    pub fn zero(p: u64) -> Self {
        PolyFp { p, coeffs: vec![] }
    }

    pub fn one(p: u64) -> Self {
        Self::constant(p, 1)
    }

    pub fn constant(p: u64, c: u64) -> Self {
        Self::new(p, [c])
    }

    /// The monomial `x^k`.
    pub fn monomial(p: u64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        Self::new(p, coeffs)
    }

    pub fn x(p: u64) -> Self {
        Self::monomial(p, 1)
    }

    /// Monic polynomial of degree `deg` whose lower coefficients are the
    /// base-`p` digits of `index`. Increasing `index` walks the monic
    /// polynomials of that degree in lexicographic order, highest
    /// coefficient first.
    pub fn monic_from_index(p: u64, deg: usize, mut index: u64) -> Self {
        let mut coeffs = Vec::with_capacity(deg + 1);
        for _ in 0..deg {
            coeffs.push(index % p);
            index /= p;
        }
        coeffs.push(1);
        Self::new(p, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let inv = inv_mod(self.leading(), self.p).expect("p is prime");
        self.scale(inv)
    }

    pub fn scale(&self, c: u64) -> Self {
        Self::new(self.p, self.coeffs.iter().map(|&a| mul_mod(a, c, self.p)))
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            self.p,
            (0..n).map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                ((a as u128 + b as u128) % self.p as u128) as u64
            }),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            self.p,
            (0..n).map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                ((a as u128 + self.p as u128 - b as u128) % self.p as u128) as u64
            }),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let t = mul_mod(a, b, self.p);
                out[i + j] = ((out[i + j] as u128 + t as u128) % self.p as u128) as u64;
            }
        }
        Self::new(self.p, out)
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let inv = inv_mod(divisor.leading(), self.p).expect("p is prime");
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Self::zero(self.p), self.clone());
        }
        let mut quot = vec![0u64; rem.len() - d];
        for k in (d..rem.len()).rev() {
            let c = mul_mod(rem[k], inv, self.p);
            if c == 0 {
                continue;
            }
            quot[k - d] = c;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                let t = mul_mod(c, b, self.p);
                let slot = &mut rem[k - d + j];
                *slot = ((*slot as u128 + self.p as u128 - t as u128) % self.p as u128) as u64;
            }
        }
        (Self::new(self.p, quot), Self::new(self.p, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul_mod(c, i as u64 % self.p, self.p)),
        )
    }

    /// `self^exp mod modulus`.
    pub fn pow_mod(&self, exp: &BigUint, modulus: &Self) -> Self {
        let mut acc = Self::one(self.p).rem(modulus);
        let base = self.rem(modulus);
        for bit in (0..exp.bits()).rev() {
            acc = acc.mul(&acc).rem(modulus);
            if exp.bit(bit) {
                acc = acc.mul(&base).rem(modulus);
            }
        }
        acc
    }

    /// Evaluates at a point of `F_p`.
    pub fn eval(&self, x: u64) -> u64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| {
            ((mul_mod(acc, x, self.p) as u128 + c as u128) % self.p as u128) as u64
        })
    }

    /// Rabin's irreducibility test.
    pub fn is_irreducible(&self) -> bool {
        let n = match self.degree() {
            None | Some(0) => return false,
            Some(1) => return true,
            Some(n) => n,
        };
        let f = self.monic();
        let x = Self::x(self.p);
        let p = BigUint::from(self.p);
        // frob[k] = x^{p^k} mod f
        let mut frob = vec![x.rem(&f)];
        for _ in 0..n {
            let next = frob.last().unwrap().pow_mod(&p, &f);
            frob.push(next);
        }
        if frob[n] != x.rem(&f) {
            return false;
        }
        factor(n as u64)
            .expect("small degree")
            .factors
            .iter()
            .all(|&(l, _)| frob[n / l as usize].sub(&x).gcd(&f).is_one())
    }

    /// Factorization into monic irreducibles with multiplicities, sorted by
    /// degree then lexicographically. The leading coefficient is dropped.
    pub fn factor(&self) -> Vec<(PolyFp, u32)> {
        assert!(!self.is_zero(), "cannot factor the zero polynomial");
        let mut out = Vec::new();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f00d ^ self.p);
        for (part, mult) in square_free(&self.monic()) {
            for (block, d) in distinct_degree(&part) {
                for irr in equal_degree(&block, d, &mut rng) {
                    out.push((irr, mult));
                }
            }
        }
        out.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
        // square_free never returns the same irreducible twice
        out
    }

    /// `p`-th root of a polynomial whose derivative vanishes.
    fn pth_root(&self) -> Self {
        Self::new(self.p, self.coeffs.iter().step_by(self.p as usize).copied())
    }
}

impl PartialOrd for PolyFp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PolyFp {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl fmt::Display for PolyFp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_poly(&self.coeffs, "x"))
    }
}

fn square_free(f: &PolyFp) -> Vec<(PolyFp, u32)> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let mut c = f.gcd(&f.derivative());
    let mut w = f.div_rem(&c).0;
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.div_rem(&y).0;
        if !fac.is_one() {
            out.push((fac.monic(), i));
        }
        w = y;
        c = c.div_rem(&w).0;
        i += 1;
    }
    if !c.is_one() {
        let root = c.pth_root();
        for (g, m) in square_free(&root.monic()) {
            out.push((g, m * f.p as u32));
        }
    }
    out
}

fn distinct_degree(f: &PolyFp) -> Vec<(PolyFp, usize)> {
    let mut out = Vec::new();
    let x = PolyFp::x(f.p);
    let p = BigUint::from(f.p);
    let mut rest = f.clone();
    let mut h = x.rem(&rest);
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = h.pow_mod(&p, &rest);
        let g = rest.gcd(&h.sub(&x));
        if !g.is_one() {
            rest = rest.div_rem(&g).0;
            h = h.rem(&rest);
            out.push((g, d));
        }
        d += 1;
    }
    if rest.degree().unwrap_or(0) > 0 {
        let deg = rest.degree().unwrap();
        out.push((rest, deg));
    }
    out
}

fn equal_degree(f: &PolyFp, d: usize, rng: &mut ChaCha8Rng) -> Vec<PolyFp> {
    let n = f.degree().expect("nonzero");
    if n == d {
        return vec![f.clone()];
    }
    let p = f.p;
    loop {
        let a = PolyFp::new(p, (0..n).map(|_| rng.gen_range(0..p)));
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if p == 2 {
            // trace map a + a^2 + ... + a^{2^{d-1}}
            let two = BigUint::from(2u32);
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.pow_mod(&two, f);
                acc = acc.add(&t);
            }
            acc
        } else {
            let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
            a.pow_mod(&e, f).sub(&PolyFp::one(p))
        };
        let g = f.gcd(&b);
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < n {
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&f.div_rem(&g).0, d, rng));
            return out;
        }
    }
}
