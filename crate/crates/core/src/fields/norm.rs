use crate::nt::as_prime_power;

use super::gf::{build_field, FieldElement, FiniteField};
use super::FieldError;

/// `F_q ⊂ F_{q^d}`, with the extension built as a single field over `F_p`
/// and the base identified as the fixed points of `a -> a^q`.
#[derive(Debug, Clone)]
pub struct FieldTower {
    ext: FiniteField,
    base_order: u64,
    degree: u32,
}

impl FieldTower {
    /// The tower with base of order `q` (a prime power) and relative degree `d`.
    pub fn new(q: u64, d: u32) -> Result<Self, FieldError> {
        let (p, s) = as_prime_power(q)
            .ok_or_else(|| FieldError::InvalidInput(format!("{q} is not a prime power")))?;
        if d == 0 {
            return Err(FieldError::InvalidInput(
                "relative degree must be at least 1".into(),
            ));
        }
        let r = s
            .checked_mul(d)
            .ok_or_else(|| FieldError::ResourceLimit("extension degree overflows".into()))?;
        Ok(FieldTower {
            ext: build_field(p, r)?,
            base_order: q,
            degree: d,
        })
    }

    pub fn ext(&self) -> &FiniteField {
        &self.ext
    }

    pub fn base_order(&self) -> u64 {
        self.base_order
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn in_base(&self, a: FieldElement) -> bool {
        self.ext.in_subfield(a, self.base_order)
    }

    /// The base field as a subset of the extension, in encoding order.
    pub fn base_elements(&self) -> Vec<FieldElement> {
        self.ext.elements().filter(|&a| self.in_base(a)).collect()
    }

    /// `N(a) = a^{(q^d - 1)/(q - 1)}`, with `N(0) = 0`.
    pub fn norm(&self, a: FieldElement) -> FieldElement {
        if a == self.ext.zero() {
            return a;
        }
        let exp = (self.ext.order() - 1) / (self.base_order - 1);
        self.ext.pow(a, exp)
    }
}

/// Norm from `ext` down to its subfield of order `base_order`.
pub fn norm(
    ext: &FiniteField,
    base_order: u64,
    a: FieldElement,
) -> Result<FieldElement, FieldError> {
    let ext_order = ext.order();
    let valid = base_order >= 2
        && as_prime_power(base_order)
            .is_some_and(|(p, s)| p == ext.characteristic() && ext.degree() % s == 0);
    if !valid {
        return Err(FieldError::InvalidInput(format!(
            "F_{ext_order} has no subfield of order {base_order}"
        )));
    }
    if !ext.contains(a) {
        return Err(FieldError::InvalidInput(format!(
            "{} is not in F_{ext_order}",
            a.0
        )));
    }
    if a == ext.zero() {
        return Ok(a);
    }
    Ok(ext.pow(a, (ext_order - 1) / (base_order - 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    #[test]
    fn f9_over_f3() {
        let t = FieldTower::new(3, 2).unwrap();
        let f = t.ext();
        assert_eq!(t.norm(f.one()), f.one());
        let mut fibers: BTreeMap<FieldElement, usize> = BTreeMap::new();
        for a in f.elements().skip(1) {
            let n = t.norm(a);
            assert!(t.in_base(n));
            *fibers.entry(n).or_default() += 1;
        }
        assert_eq!(fibers.len(), 2);
        assert!(fibers.values().all(|&c| c == 4));
        for a in [f.from_int(1), f.from_int(2)] {
            assert_eq!(t.norm(a), f.pow(a, 2));
        }
    }

    #[test]
    fn free_function_validates_subfield() {
        let f = build_field(2, 6).unwrap();
        assert!(norm(&f, 4, f.root()).is_ok());
        assert!(norm(&f, 8, f.root()).is_ok());
        assert!(norm(&f, 16, f.root()).is_err());
        assert!(norm(&f, 3, f.root()).is_err());
    }
}
