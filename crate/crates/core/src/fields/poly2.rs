//! Polynomials over `F_2` packed into 64-bit limbs.

use std::cmp::Ordering;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::render_poly;

/// A polynomial over `F_2`; bit `i` is the coefficient of `x^i`. Nonzero
/// polynomials are automatically monic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly2 {
    limbs: Vec<u64>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2::default()
    }

    pub fn one() -> Self {
        Self::from_u64(1)
    }

    pub fn x() -> Self {
        Self::from_u64(2)
    }

    pub fn from_u64(bits: u64) -> Self {
        Self::from_limbs(vec![bits])
    }

    pub fn from_u128(bits: u128) -> Self {
        Self::from_limbs(vec![bits as u64, (bits >> 64) as u64])
    }

    pub fn from_limbs(limbs: Vec<u64>) -> Self {
        let mut p = Poly2 { limbs };
        p.trim();
        p
    }

    /// Sum of `x^e` over the given exponents (repeats cancel).
    pub fn from_exponents(exps: &[usize]) -> Self {
        let mut p = Poly2::zero();
        for &e in exps {
            p.flip(e);
        }
        p.trim();
        p
    }

    /// Coefficients reduced mod 2, lowest degree first.
    pub fn from_coeffs(coeffs: &[u64]) -> Self {
        let exps: Vec<usize> = coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c % 2 == 1)
            .map(|(i, _)| i)
            .collect();
        Self::from_exponents(&exps)
    }

    fn flip(&mut self, e: usize) {
        let limb = e / 64;
        if self.limbs.len() <= limb {
            self.limbs.resize(limb + 1, 0);
        }
        self.limbs[limb] ^= 1 << (e % 64);
    }

    fn trim(&mut self) {
        while self.limbs.last() == Some(&0) {
            self.limbs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.limbs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        let top = *self.limbs.last()?;
        Some((self.limbs.len() - 1) * 64 + 63 - top.leading_zeros() as usize)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.limbs
            .get(i / 64)
            .is_some_and(|&l| (l >> (i % 64)) & 1 == 1)
    }

    pub fn coeffs(&self) -> Vec<u64> {
        match self.degree() {
            None => vec![],
            Some(d) => (0..=d).map(|i| self.coeff(i) as u64).collect(),
        }
    }

    pub fn add(&self, other: &Poly2) -> Poly2 {
        let n = self.limbs.len().max(other.limbs.len());
        Poly2::from_limbs(
            (0..n)
                .map(|i| self.limbs.get(i).unwrap_or(&0) ^ other.limbs.get(i).unwrap_or(&0))
                .collect(),
        )
    }

    fn xor_shifted(acc: &mut Vec<u64>, src: &[u64], shift: usize) {
        let (limb_shift, bit_shift) = (shift / 64, shift % 64);
        let need = src.len() + limb_shift + 1;
        if acc.len() < need {
            acc.resize(need, 0);
        }
        for (i, &w) in src.iter().enumerate() {
            acc[i + limb_shift] ^= w << bit_shift;
            if bit_shift > 0 {
                acc[i + limb_shift + 1] ^= w >> (64 - bit_shift);
            }
        }
    }

    pub fn mul(&self, other: &Poly2) -> Poly2 {
        let mut acc = Vec::new();
        if let Some(d) = self.degree() {
            for i in 0..=d {
                if self.coeff(i) {
                    Self::xor_shifted(&mut acc, &other.limbs, i);
                }
            }
        }
        Poly2::from_limbs(acc)
    }

    pub fn square(&self) -> Poly2 {
        let exps: Vec<usize> = self
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == 1)
            .map(|(i, _)| 2 * i)
            .collect();
        Poly2::from_exponents(&exps)
    }

    pub fn pow(&self, mut e: u32) -> Poly2 {
        let mut acc = Poly2::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.square();
            e >>= 1;
        }
        acc
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly2) -> (Poly2, Poly2) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let mut rem = self.limbs.clone();
        let mut quot = Poly2::zero();
        loop {
            let r = Poly2::from_limbs(rem.clone());
            match r.degree() {
                Some(rd) if rd >= dd => {
                    let shift = rd - dd;
                    quot.flip(shift);
                    Self::xor_shifted(&mut rem, &divisor.limbs, shift);
                    while rem.last() == Some(&0) {
                        rem.pop();
                    }
                }
                _ => break,
            }
        }
        quot.trim();
        (quot, Poly2::from_limbs(rem))
    }

    pub fn rem(&self, divisor: &Poly2) -> Poly2 {
        self.div_rem(divisor).1
    }

    pub fn gcd(&self, other: &Poly2) -> Poly2 {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    pub fn derivative(&self) -> Poly2 {
        let exps: Vec<usize> = match self.degree() {
            None => vec![],
            Some(d) => (1..=d)
                .step_by(2)
                .filter(|&i| self.coeff(i))
                .map(|i| i - 1)
                .collect(),
        };
        Poly2::from_exponents(&exps)
    }

    /// Square root of a polynomial with only even-degree terms.
    fn sqrt_even(&self) -> Poly2 {
        let exps: Vec<usize> = match self.degree() {
            None => vec![],
            Some(d) => (0..=d)
                .step_by(2)
                .filter(|&i| self.coeff(i))
                .map(|i| i / 2)
                .collect(),
        };
        Poly2::from_exponents(&exps)
    }

    pub fn is_irreducible(&self) -> bool {
        match self.degree() {
            None | Some(0) => false,
            _ => {
                let f = factor_poly2(self);
                f.len() == 1 && f[0].1 == 1
            }
        }
    }
}

impl Ord for Poly2 {
    fn cmp(&self, other: &Self) -> Ordering {
        self.limbs
            .len()
            .cmp(&other.limbs.len())
            .then_with(|| self.limbs.iter().rev().cmp(other.limbs.iter().rev()))
    }
}

impl PartialOrd for Poly2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_poly(&self.coeffs(), "x"))
    }
}

/// Unique factorization of a nonzero `f` into irreducibles, sorted by
/// degree then bit pattern.
pub fn factor_poly2(f: &Poly2) -> Vec<(Poly2, u32)> {
    assert!(!f.is_zero(), "cannot factor the zero polynomial");
    let mut rng = ChaCha8Rng::seed_from_u64(0xf2f2_f2f2);
    let mut out = Vec::new();
    for (part, mult) in square_free(f) {
        for (block, d) in distinct_degree(&part) {
            for irr in equal_degree(&block, d, &mut rng) {
                out.push((irr, mult));
            }
        }
    }
    out.sort();
    out
}

fn square_free(f: &Poly2) -> Vec<(Poly2, u32)> {
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
            out.push((fac, i));
        }
        w = y;
        c = c.div_rem(&w).0;
        i += 1;
    }
    if !c.is_one() {
        for (g, m) in square_free(&c.sqrt_even()) {
            out.push((g, 2 * m));
        }
    }
    out
}

fn distinct_degree(f: &Poly2) -> Vec<(Poly2, usize)> {
    let mut out = Vec::new();
    let x = Poly2::x();
    let mut rest = f.clone();
    let mut h = x.rem(&rest);
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = h.square().rem(&rest);
        let g = rest.gcd(&h.add(&x));
        if !g.is_one() {
            rest = rest.div_rem(&g).0;
            h = h.rem(&rest);
            out.push((g, d));
        }
        d += 1;
    }
    if let Some(deg) = rest.degree().filter(|&deg| deg > 0) {
        out.push((rest, deg));
    }
    out
}

fn equal_degree(f: &Poly2, d: usize, rng: &mut ChaCha8Rng) -> Vec<Poly2> {
    let n = f.degree().expect("nonzero");
    if n == d {
        return vec![f.clone()];
    }
    loop {
        let a = Poly2::from_limbs((0..n.div_ceil(64)).map(|_| rng.gen()).collect()).rem(f);
        // trace map a + a^2 + ... + a^{2^{d-1}}
        let mut t = a.clone();
        let mut acc = a;
        for _ in 1..d {
            t = t.square().rem(f);
            acc = acc.add(&t);
        }
        let g = f.gcd(&acc);
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < n {
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&f.div_rem(&g).0, d, rng));
            return out;
        }
    }
}
