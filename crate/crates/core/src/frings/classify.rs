use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use serde::{Serialize, Serializer};

use crate::groups::{direct_sum_all, AbelianGroup};
use crate::nt::{as_prime_power, classify_field, FieldClass};

use super::ring::FiniteRing;
use super::spec::RingSpec;
use super::structure::{local_factors, ring_units, LocalRing};
use super::{RingError, RingOptions, UnitMethod};

/// The primary rings with cyclic unit group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CyclicUnitsCase {
    /// `F_{q^t}`.
    Field,
    /// `Z_{q^s}`, `q` odd.
    OddPrimePowerIntegers,
    /// `Z_4`.
    Z4,
    /// `F_q[x]/(x^2)`, `q` prime.
    DualNumbers,
    /// `F_2[x]/(x^3)`.
    F2Cubic,
    /// `Z_4[x]/(2x, x^2 - 2)`.
    Ps6,
}

impl CyclicUnitsCase {
    pub fn number(&self) -> u8 {
        *self as u8 + 1
    }

    pub fn label(&self) -> String {
        let name = match self {
            CyclicUnitsCase::Field => "F_{q^t}",
            CyclicUnitsCase::OddPrimePowerIntegers => "Z_{q^s}",
            CyclicUnitsCase::Z4 => "Z_4",
            CyclicUnitsCase::DualNumbers => "F_q[x]/(x^2)",
            CyclicUnitsCase::F2Cubic => "F_2[x]/(x^3)",
            CyclicUnitsCase::Ps6 => "Z_4[x]/(2x, x^2 - 2)",
        };
        format!("({}) {name}", self.number())
    }
}

impl fmt::Display for CyclicUnitsCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Which of the six cyclic-unit primary rings `spec` is, if any.
///
/// Fails with `NotPrimary` for products and rings with several local factors.
pub fn pearson_schneider_match(spec: &RingSpec) -> Result<Option<CyclicUnitsCase>, RingError> {
    let locals = local_factors(spec)?;
    let local = match locals.as_slice() {
        [l] if !spec.is_product() => *l,
        _ => {
            return Err(RingError::NotPrimary(format!(
                "{spec} has {} local factors",
                locals.len()
            )))
        }
    };
    if let RingSpec::ZMod(n) = spec {
        let (p, _) = as_prime_power(*n).expect("primary");
        if p != 2 {
            return Ok(Some(CyclicUnitsCase::OddPrimePowerIntegers));
        }
    }
    Ok(match local {
        LocalRing::Field { .. } => Some(CyclicUnitsCase::Field),
        LocalRing::IntegersModPrimePower { p, .. } if p != 2 => {
            Some(CyclicUnitsCase::OddPrimePowerIntegers)
        }
        LocalRing::IntegersModPrimePower { p: 2, k: 2 } => Some(CyclicUnitsCase::Z4),
        LocalRing::IntegersModPrimePower { .. } => None,
        LocalRing::Truncated { r: 1, e: 2, .. } => Some(CyclicUnitsCase::DualNumbers),
        LocalRing::Truncated { p: 2, r: 1, e: 3 } => Some(CyclicUnitsCase::F2Cubic),
        LocalRing::Truncated { .. } => None,
        LocalRing::Ps6 => Some(CyclicUnitsCase::Ps6),
    })
}

/// The indecomposable rings with indecomposable unit group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IndecomposableCase {
    F2,
    F9,
    /// `F_p`, `p` a Fermat prime.
    Fermat(u64),
    /// `F_{q+1}`, `q` a Mersenne prime; holds `q + 1`.
    MersennePlusOne(u64),
    Z4,
    F2Dual,
    F2Cubic,
    Ps6,
}

impl IndecomposableCase {
    pub fn number(&self) -> u8 {
        match self {
            IndecomposableCase::F2 => 1,
            IndecomposableCase::F9 => 2,
            IndecomposableCase::Fermat(_) => 3,
            IndecomposableCase::MersennePlusOne(_) => 4,
            IndecomposableCase::Z4 => 5,
            IndecomposableCase::F2Dual => 6,
            IndecomposableCase::F2Cubic => 7,
            IndecomposableCase::Ps6 => 8,
        }
    }

    pub fn label(&self) -> String {
        let name = match self {
            IndecomposableCase::F2 => "F_2".to_string(),
            IndecomposableCase::F9 => "F_9".to_string(),
            IndecomposableCase::Fermat(p) => format!("F_{p}, Fermat prime"),
            IndecomposableCase::MersennePlusOne(q) => {
                format!("F_{q}, Mersenne prime {} plus one", q - 1)
            }
            IndecomposableCase::Z4 => "Z_4".to_string(),
            IndecomposableCase::F2Dual => "F_2[x]/(x^2)".to_string(),
            IndecomposableCase::F2Cubic => "F_2[x]/(x^3)".to_string(),
            IndecomposableCase::Ps6 => "Z_4[x]/(2x, x^2 - 2)".to_string(),
        };
        format!("({}) {name}", self.number())
    }

    fn of_local(local: &LocalRing) -> Option<Self> {
        match *local {
            LocalRing::Field { p, r } => match classify_field(p, r).ok()? {
                FieldClass::IndecF2 => Some(IndecomposableCase::F2),
                FieldClass::IndecF9 => Some(IndecomposableCase::F9),
                FieldClass::IndecFermat(p) => Some(IndecomposableCase::Fermat(p)),
                FieldClass::IndecMersennePlusOne(_) => {
                    Some(IndecomposableCase::MersennePlusOne(1u64 << r))
                }
                FieldClass::Decomposable => None,
            },
            LocalRing::IntegersModPrimePower { p: 2, k: 2 } => Some(IndecomposableCase::Z4),
            LocalRing::Truncated { p: 2, r: 1, e: 2 } => Some(IndecomposableCase::F2Dual),
            LocalRing::Truncated { p: 2, r: 1, e: 3 } => Some(IndecomposableCase::F2Cubic),
            LocalRing::Ps6 => Some(IndecomposableCase::Ps6),
            _ => None,
        }
    }
}

impl fmt::Display for IndecomposableCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Matches `spec` against the eight-ring list after discarding `F_2`
/// factors: some copies of `F_2` times exactly one listed ring.
pub fn indecomposable_units_match(
    spec: &RingSpec,
) -> Result<Option<IndecomposableCase>, RingError> {
    let locals = local_factors(spec)?;
    let f2 = LocalRing::Field { p: 2, r: 1 };
    let rest: Vec<&LocalRing> = locals.iter().filter(|l| **l != f2).collect();
    Ok(match rest.as_slice() {
        [] => Some(IndecomposableCase::F2),
        [one] => IndecomposableCase::of_local(one),
        _ => None,
    })
}

/// Unit-group classification of a finite commutative ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnitGroupReport {
    #[serde(rename = "ring", serialize_with = "serialize_display")]
    pub spec: RingSpec,
    pub unit_group: AbelianGroup,
    pub unit_order: u64,
    pub ring_indecomposable: bool,
    pub units_indecomposable: bool,
    pub matched_case: Option<String>,
}

fn serialize_display<S: Serializer>(spec: &RingSpec, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(spec)
}

impl fmt::Display for UnitGroupReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ring: {}", self.spec)?;
        writeln!(f, "unit group: {}", self.unit_group)?;
        writeln!(f, "unit order: {}", self.unit_order)?;
        writeln!(f, "ring indecomposable: {}", self.ring_indecomposable)?;
        writeln!(f, "units indecomposable: {}", self.units_indecomposable)?;
        write!(
            f,
            "matched case: {}",
            self.matched_case.as_deref().unwrap_or("none")
        )
    }
}

/// Classifies rings, caching the unit groups of individual factors.
#[derive(Debug, Default)]
pub struct RingClassifier {
    options: RingOptions,
    cache: Mutex<HashMap<RingSpec, AbelianGroup>>,
}

impl RingClassifier {
    pub fn new(options: RingOptions) -> Self {
        RingClassifier {
            options,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn options(&self) -> &RingOptions {
        &self.options
    }

    fn brute_force(&self, spec: &RingSpec) -> Result<AbelianGroup, RingError> {
        let order = spec.order()?;
        if order > self.options.brute_force_cap {
            return Err(RingError::ResourceLimit(format!(
                "{spec} has {order} elements, above the brute-force cap of {}",
                self.options.brute_force_cap
            )));
        }
        Ok(ring_units(&FiniteRing::new(spec)?)?.1)
    }

    fn atom_units(&self, atom: &RingSpec) -> Result<AbelianGroup, RingError> {
        if let Some(g) = self.cache.lock().expect("cache lock").get(atom) {
            return Ok(g.clone());
        }
        let group = match super::structure::units_structural(atom) {
            Ok(g) => g,
            Err(RingError::Unsupported(_)) => self.brute_force(atom)?,
            Err(e) => return Err(e),
        };
        self.cache
            .lock()
            .expect("cache lock")
            .insert(atom.clone(), group.clone());
        Ok(group)
    }

    /// Unit group using the configured method.
    pub fn unit_group(&self, spec: &RingSpec) -> Result<AbelianGroup, RingError> {
        match self.options.method {
            UnitMethod::BruteForce => self.brute_force(spec),
            UnitMethod::Structural => super::structure::units_structural(spec),
            UnitMethod::Auto => {
                let groups = spec
                    .factors()
                    .iter()
                    .map(|a| self.atom_units(a))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(direct_sum_all(&groups))
            }
        }
    }

    /// Whether the ring has no nontrivial idempotent. Searched exhaustively
    /// within the cap, otherwise read off the local decomposition.
    pub fn ring_indecomposable(&self, spec: &RingSpec) -> Result<bool, RingError> {
        let order = spec.order()?;
        if order <= self.options.brute_force_cap && self.options.method != UnitMethod::Structural {
            return Ok(FiniteRing::new(spec)?.idempotents().len() == 2);
        }
        Ok(local_factors(spec)?.len() == 1)
    }

    pub fn classify(&self, spec: &RingSpec) -> Result<UnitGroupReport, RingError> {
        let unit_group = self.unit_group(spec)?;
        let unit_order = u64::try_from(unit_group.order())
            .map_err(|_| RingError::ResourceLimit("unit group order overflows".into()))?;
        let units_indecomposable = unit_group.is_indecomposable();
        Ok(UnitGroupReport {
            spec: spec.clone(),
            ring_indecomposable: self.ring_indecomposable(spec)?,
            units_indecomposable,
            matched_case: indecomposable_units_match(spec)?.map(|c| c.label()),
            unit_group,
            unit_order,
        })
    }
}

/// Classifies a single ring with default options.
pub fn classify_ring(spec: &RingSpec) -> Result<UnitGroupReport, RingError> {
    RingClassifier::new(RingOptions::default()).classify(spec)
}
