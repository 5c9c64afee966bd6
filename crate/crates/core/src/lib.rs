//! Decision procedures for indecomposable unit groups.
//!
//! A finite abelian group is indecomposable when it is trivial or cyclic of
//! prime-power order. This crate decides that property for the unit groups
//! of finite fields and finite commutative rings, and checks the supporting
//! number theory by exhaustive, bounded search:
//!
//! - [`nt`]: primality, factoring, prime powers, Fermat and Mersenne primes,
//!   and the classification of finite fields.
//! - [`groups`]: finite abelian groups in invariant-factor form.
//! - [`fields`]: concrete `F_{p^r}`, norms, the cyclotomic tower obstruction
//!   and the unit group of `F_2(x)`.
//! - [`frings`]: a small ring-spec language, brute-force and closed-form unit
//!   groups, idempotents and ring classification.
//! - [`search`]: parallel scans over fields, Catalan solutions, consecutive
//!   prime powers and primitive prime divisors.
//! - [`cli`]: the command-line front end used by the `indecomp` binary.

pub mod cli;
pub mod fields;
pub mod frings;
pub mod groups;
pub mod nt;
pub mod search;
