use std::fmt;

use crate::fields::render_poly;
use crate::nt::as_prime_power;

use super::RingError;

/// Coefficient ring of a polynomial quotient.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Base {
    /// `Z/p` for a prime `p`.
    ZMod(u64),
    /// `GF(q)` for a prime power `q`.
    Gf(u64),
}

impl Base {
    pub fn order(&self) -> u64 {
        match *self {
            Base::ZMod(p) | Base::Gf(p) => p,
        }
    }

    pub fn characteristic(&self) -> u64 {
        as_prime_power(self.order()).expect("validated base").0
    }

    /// Degree over the prime field.
    pub fn degree(&self) -> u32 {
        as_prime_power(self.order()).expect("validated base").1
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Base::ZMod(p) => write!(f, "Z/{p}"),
            Base::Gf(q) => write!(f, "GF({q})"),
        }
    }
}

/// Abstract syntax of a finite commutative ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingSpec {
    ZMod(u64),
    Gf(u64),
    /// `base[x]/(modulus)`; the modulus has coefficients in the prime
    /// field (lowest degree first), is monic and has degree >= 1.
    PolyQuot {
        base: Base,
        modulus: Vec<u64>,
    },
    /// `Z/4[x]/(2x, x^2 - 2)`.
    Ps6,
    /// Flat, at least two factors, none of them a product.
    Product(Vec<RingSpec>),
}

impl RingSpec {
    pub fn zmod(n: u64) -> Result<Self, RingError> {
        if n < 2 {
            return Err(RingError::InvalidInput(format!("Z/{n} needs n >= 2")));
        }
        Ok(RingSpec::ZMod(n))
    }

    pub fn gf(q: u64) -> Result<Self, RingError> {
        if as_prime_power(q).is_none() {
            return Err(RingError::InvalidInput(format!(
                "GF({q}) needs a prime power"
            )));
        }
        Ok(RingSpec::Gf(q))
    }

    /// Validates and normalizes a quotient of `base[x]`.
    pub fn poly_quot(base: Base, modulus: Vec<u64>) -> Result<Self, RingError> {
        let (p, _) = as_prime_power(base.order())
            .ok_or_else(|| RingError::InvalidInput(format!("{base} is not a finite field")))?;
        if let Base::ZMod(n) = base {
            if p != n {
                return Err(RingError::InvalidInput(format!(
                    "quotients of Z/{n}[x] are not supported; use a prime modulus"
                )));
            }
        }
        let mut modulus: Vec<u64> = modulus.into_iter().map(|c| c % p).collect();
        while modulus.last() == Some(&0) {
            modulus.pop();
        }
        match modulus.last() {
            Some(1) if modulus.len() >= 2 => Ok(RingSpec::PolyQuot { base, modulus }),
            Some(_) if modulus.len() >= 2 => {
                Err(RingError::InvalidInput("the modulus must be monic".into()))
            }
            _ => Err(RingError::InvalidInput(
                "the modulus must have degree at least 1".into(),
            )),
        }
    }

    /// Flattens nested products; a single factor is returned as itself.
    pub fn product(factors: Vec<RingSpec>) -> Result<Self, RingError> {
        let mut flat = Vec::new();
        for f in factors {
            match f {
                RingSpec::Product(inner) => flat.extend(inner),
                atom => flat.push(atom),
            }
        }
        match flat.len() {
            0 => Err(RingError::InvalidInput("empty product".into())),
            1 => Ok(flat.pop().unwrap()),
            _ => Ok(RingSpec::Product(flat)),
        }
    }

    /// The non-product factors; an atom is its own single factor.
    pub fn factors(&self) -> &[RingSpec] {
        match self {
            RingSpec::Product(fs) => fs,
            atom => std::slice::from_ref(atom),
        }
    }

    pub fn is_product(&self) -> bool {
        matches!(self, RingSpec::Product(_))
    }

    pub fn order(&self) -> Result<u64, RingError> {
        let overflow =
            || RingError::ResourceLimit(format!("the order of {self} overflows 64 bits"));
        match self {
            RingSpec::ZMod(n) | RingSpec::Gf(n) => Ok(*n),
            RingSpec::PolyQuot { base, modulus } => base
                .order()
                .checked_pow(modulus.len() as u32 - 1)
                .ok_or_else(overflow),
            RingSpec::Ps6 => Ok(8),
            RingSpec::Product(fs) => fs.iter().try_fold(1u64, |acc, f| {
                acc.checked_mul(f.order()?).ok_or_else(overflow)
            }),
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::ZMod(n) => write!(f, "Z/{n}"),
            RingSpec::Gf(q) => write!(f, "GF({q})"),
            RingSpec::PolyQuot { base, modulus } => {
                write!(f, "{base}[x]/({})", render_poly(modulus, "x"))
            }
            RingSpec::Ps6 => write!(f, "Z/4[x]/(2x,x^2-2)"),
            RingSpec::Product(fs) => {
                for (i, factor) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, " * ")?;
                    }
                    write!(f, "{factor}")?;
                }
                Ok(())
            }
        }
    }
}
