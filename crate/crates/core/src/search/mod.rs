//! Exhaustive scans over bounded ranges, parallel over contiguous chunks.
//!
//! Findings are merged, sorted and deduplicated, so they do not depend on
//! the worker count or on how the range is partitioned.

mod bang;
mod scans;
mod sieve;

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::nt::NtError;

pub use bang::{
    bang_scan, primitive_prime_divisor, primitive_prime_divisor_unchecked, BangWitness,
};
pub use scans::{
    catalan_scan, consecutive_prime_powers, scan_indecomposable_fields, CatalanSolution,
    PrimePowerPair, MAX_SIEVE_BOUND,
};
pub use sieve::{primes_up_to, SegmentedSieve};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("resource limit: {0}")]
    ResourceLimit(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),
}

impl From<NtError> for SearchError {
    fn from(e: NtError) -> Self {
        match e {
            NtError::InvalidInput(m) => SearchError::InvalidInput(m),
            NtError::ResourceLimit(m) => SearchError::ResourceLimit(m),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Threads in the scan pool; at least 1.
    pub workers: usize,
    /// Numbers held in memory per sieve segment.
    pub segment_size: u64,
    /// Largest bit length the factoring routines accept.
    pub factor_bits: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
            segment_size: 1 << 16,
            factor_bits: crate::nt::big::BigFactorLimits::default().max_bits,
        }
    }
}

impl SearchOptions {
    pub fn with_workers(workers: usize) -> Self {
        SearchOptions {
            workers,
            ..SearchOptions::default()
        }
    }
}

/// Result of a scan, serialized as
/// `{"kind", "bound", "findings", "elapsed_ms", "workers"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport<T> {
    pub kind: String,
    pub bound: u64,
    pub findings: Vec<T>,
    pub elapsed_ms: u64,
    pub workers: usize,
}

impl<T> ScanReport<T> {
    pub(crate) fn timed(
        kind: &str,
        bound: u64,
        options: &SearchOptions,
        scan: impl FnOnce() -> Result<Vec<T>, SearchError>,
    ) -> Result<Self, SearchError> {
        let start = Instant::now();
        let findings = scan()?;
        Ok(ScanReport {
            kind: kind.to_string(),
            bound,
            findings,
            elapsed_ms: start.elapsed().as_millis() as u64,
            workers: options.workers,
        })
    }
}

/// Contiguous chunks covering `[lo, hi]`, about eight per worker and
/// no shorter than a sieve segment.
fn chunks(lo: u64, hi: u64, workers: usize, segment: u64) -> Vec<(u64, u64)> {
    let span = hi - lo + 1;
    let pieces = (workers as u64 * 8).min(span).max(1);
    let len = span.div_ceil(pieces).max(segment.min(span)).max(1);
    let mut out = Vec::new();
    let mut start = lo;
    loop {
        let end = hi.min(start.saturating_add(len - 1));
        out.push((start, end));
        if end == hi {
            return out;
        }
        start = end + 1;
    }
}

/// Splits `[lo, hi]` into contiguous chunks, maps them on a pool of
/// `workers` threads and returns the sorted, deduplicated union.
pub(crate) fn parallel_chunks<T, F>(
    lo: u64,
    hi: u64,
    options: &SearchOptions,
    scan: F,
) -> Result<Vec<T>, SearchError>
where
    T: Ord + Send,
    F: Fn(u64, u64) -> Result<Vec<T>, SearchError> + Sync,
{
    if lo > hi {
        return Ok(Vec::new());
    }
    let workers = options.workers.max(1);
    let chunks = chunks(lo, hi, workers, options.segment_size);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| SearchError::ResourceLimit(format!("cannot start worker pool: {e}")))?;
    let parts: Vec<Vec<T>> = pool.install(|| {
        chunks
            .par_iter()
            .map(|&(a, b)| scan(a, b))
            .collect::<Result<_, _>>()
    })?;
    let mut out: Vec<T> = parts.into_iter().flatten().collect();
    out.sort();
    out.dedup();
    Ok(out)
}
