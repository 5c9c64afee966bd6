//! The unit group of `F_2(x)`: a rational function `f/g` maps to the
//! integer vector of multiplicities of irreducibles in `f` minus those in
//! `g`. This is an isomorphism onto the free abelian group on the monic
//! irreducibles, since `F_2^×` is trivial.

use std::collections::BTreeMap;
use std::fmt;

use super::poly2::{factor_poly2, Poly2};
use super::FieldError;

/// Finitely supported map from irreducible polynomials to nonzero exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ExponentVector {
    entries: BTreeMap<Poly2, i64>,
}

impl ExponentVector {
    pub fn identity() -> Self {
        ExponentVector::default()
    }

    pub fn is_identity(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, f: &Poly2) -> i64 {
        self.entries.get(f).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Poly2, i64)> {
        self.entries.iter().map(|(f, &e)| (f, e))
    }

    fn bump(&mut self, f: &Poly2, by: i64) {
        let e = self.entries.entry(f.clone()).or_insert(0);
        *e += by;
        if *e == 0 {
            self.entries.remove(f);
        }
    }

    /// Group operation (componentwise sum).
    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        let mut out = self.clone();
        for (f, e) in other.iter() {
            out.bump(f, e);
        }
        out
    }

    pub fn negate(&self) -> ExponentVector {
        self.scale(-1)
    }

    pub fn scale(&self, k: i64) -> ExponentVector {
        if k == 0 {
            return ExponentVector::identity();
        }
        ExponentVector {
            entries: self
                .entries
                .iter()
                .map(|(f, &e)| (f.clone(), e * k))
                .collect(),
        }
    }

    /// Numerator and denominator of the rational function this vector
    /// represents, in lowest terms.
    pub fn to_fraction(&self) -> (Poly2, Poly2) {
        let mut num = Poly2::one();
        let mut den = Poly2::one();
        for (f, e) in self.iter() {
            let power = f.pow(e.unsigned_abs() as u32);
            if e > 0 {
                num = num.mul(&power);
            } else {
                den = den.mul(&power);
            }
        }
        (num, den)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "{{}}");
        }
        let parts: Vec<String> = self.iter().map(|(p, e)| format!("{p}: {e}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Image of `numerator / denominator` in the free abelian group on the
/// irreducibles of `F_2[x]`.
pub fn unit_exponent_vector(
    numerator: &Poly2,
    denominator: &Poly2,
) -> Result<ExponentVector, FieldError> {
    if numerator.is_zero() {
        return Err(FieldError::InvalidInput(
            "zero numerator is not a unit".into(),
        ));
    }
    if denominator.is_zero() {
        return Err(FieldError::InvalidInput("zero denominator".into()));
    }
    let mut v = ExponentVector::identity();
    for (f, e) in factor_poly2(numerator) {
        v.bump(&f, e as i64);
    }
    for (f, e) in factor_poly2(denominator) {
        v.bump(&f, -(e as i64));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(exps: &[usize]) -> Poly2 {
        Poly2::from_exponents(exps)
    }

    #[test]
    fn documented_vectors() {
        let v = unit_exponent_vector(&p(&[3, 1]), &p(&[1, 0])).unwrap();
        assert_eq!(v.get(&p(&[1])), 1);
        assert_eq!(v.get(&p(&[1, 0])), 1);
        assert_eq!(v.iter().count(), 2);
        assert!(unit_exponent_vector(&Poly2::one(), &Poly2::one())
            .unwrap()
            .is_identity());
        assert!(unit_exponent_vector(&p(&[1]), &p(&[1]))
            .unwrap()
            .is_identity());
    }

    #[test]
    fn zero_is_rejected() {
        assert!(unit_exponent_vector(&Poly2::zero(), &Poly2::one()).is_err());
        assert!(unit_exponent_vector(&Poly2::one(), &Poly2::zero()).is_err());
    }

    #[test]
    fn fraction_roundtrip() {
        let v = unit_exponent_vector(&p(&[4, 1, 0]).mul(&p(&[1])), &p(&[2, 0])).unwrap();
        let (num, den) = v.to_fraction();
        assert_eq!(num, p(&[4, 1, 0]).mul(&p(&[1])));
        assert_eq!(den, p(&[2, 0]));
        assert_eq!(v.add(&v.negate()), ExponentVector::identity());
    }
}
