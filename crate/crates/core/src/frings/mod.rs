//! Finite commutative rings: a spec grammar, exhaustive arithmetic, unit
//! groups, idempotents and the classification of rings with cyclic or
//! indecomposable unit groups.

mod catalog;
mod classify;
mod parse;
mod ring;
mod spec;
mod structure;

use thiserror::Error;

use crate::fields::FieldError;
use crate::groups::GroupError;
use crate::nt::NtError;

pub use catalog::{expressible_specs, primary_specs};
pub use classify::{
    classify_ring, indecomposable_units_match, pearson_schneider_match, CyclicUnitsCase,
    IndecomposableCase, RingClassifier, UnitGroupReport,
};
pub use parse::{parse_poly, parse_ring_spec, ParseError};
pub use ring::{FiniteRing, Payload, RingValue};
pub use spec::{Base, RingSpec};
pub use structure::{
    crt_decompose, enumerate_elements, idempotents, is_indecomposable_ring, is_primary,
    local_factors, ring_units, units_bruteforce, units_structural, LocalRing,
};

pub const DEFAULT_BRUTE_FORCE_CAP: u64 = 4096;

#[derive(Debug, Error)]
pub enum RingError {
    #[error("parse error {0}")]
    Parse(#[from] ParseError),
    #[error("resource limit: {0}")]
    ResourceLimit(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("not primary: {0}")]
    NotPrimary(String),
}

impl From<FieldError> for RingError {
    fn from(e: FieldError) -> Self {
        match e {
            FieldError::ResourceLimit(m) => RingError::ResourceLimit(m),
            FieldError::InvalidInput(m) | FieldError::NotFound(m) => RingError::InvalidInput(m),
        }
    }
}

impl From<NtError> for RingError {
    fn from(e: NtError) -> Self {
        match e {
            NtError::ResourceLimit(m) => RingError::ResourceLimit(m),
            NtError::InvalidInput(m) => RingError::InvalidInput(m),
        }
    }
}

impl From<GroupError> for RingError {
    fn from(e: GroupError) -> Self {
        RingError::InvalidInput(e.to_string())
    }
}

/// How unit groups are computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum UnitMethod {
    /// Closed formulas per factor, brute force where none applies.
    #[default]
    Auto,
    Structural,
    BruteForce,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RingOptions {
    /// Largest ring enumerated element by element.
    pub brute_force_cap: u64,
    pub method: UnitMethod,
}

impl Default for RingOptions {
    fn default() -> Self {
        RingOptions {
            brute_force_cap: DEFAULT_BRUTE_FORCE_CAP,
            method: UnitMethod::Auto,
        }
    }
}
