//! Exact linear algebra over the integers, the rationals, and prime fields.
//!
//! Everything here works with arbitrary-precision integers; there is no
//! floating point anywhere. The integer side provides column-style Hermite
//! normal form (used to extract saturated kernel lattices), Smith normal form
//! with unimodular certificates (used to read off torsion), and exact linear
//! solves. The rational side is a fraction-free Bareiss elimination used as an
//! independent oracle for ranks and null spaces.

mod fp;
mod hnf;
mod lattice;
mod matrix;
mod rational;
mod snf;

pub use fp::FpMatrix;
pub use hnf::{hnf, integer_kernel, integer_solve, integer_solve_many, HnfDecomposition};
pub use lattice::{lattice_canonical, lattice_contains, lattice_eq, lattice_intersect};
pub use matrix::IntMatrix;
pub use rational::{bareiss_det, bareiss_rank, rational_kernel};
pub use snf::{snf, snf_invariant_factors, SmithDecomposition};

use std::sync::atomic::{AtomicU64, Ordering};

/// Running totals of certificate checks performed by this module.
///
/// Every full Smith decomposition is verified by multiplying the unimodular
/// transforms back against the input, and every saturation check records its
/// outcome here. A nonzero failure count means an internal bug, never bad
/// input.
#[derive(Debug, Default)]
pub struct CertificateCounters {
    pub snf_calls: AtomicU64,
    pub snf_failures: AtomicU64,
    pub saturation_checks: AtomicU64,
    pub saturation_failures: AtomicU64,
}

static COUNTERS: CertificateCounters = CertificateCounters {
    snf_calls: AtomicU64::new(0),
    snf_failures: AtomicU64::new(0),
    saturation_checks: AtomicU64::new(0),
    saturation_failures: AtomicU64::new(0),
};

pub fn certificate_counters() -> &'static CertificateCounters {
    &COUNTERS
}

pub(crate) fn record_snf_check(ok: bool) {
    COUNTERS.snf_calls.fetch_add(1, Ordering::Relaxed);
    if !ok {
        COUNTERS.snf_failures.fetch_add(1, Ordering::Relaxed);
    }
}

pub(crate) fn record_saturation_check(ok: bool) {
    COUNTERS.saturation_checks.fetch_add(1, Ordering::Relaxed);
    if !ok {
        COUNTERS.saturation_failures.fetch_add(1, Ordering::Relaxed);
    }
}

/// Snapshot of [`certificate_counters`] suitable for before/after comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CounterSnapshot {
    pub snf_calls: u64,
    pub snf_failures: u64,
    pub saturation_checks: u64,
    pub saturation_failures: u64,
}

pub fn counter_snapshot() -> CounterSnapshot {
    CounterSnapshot {
        snf_calls: COUNTERS.snf_calls.load(Ordering::Relaxed),
        snf_failures: COUNTERS.snf_failures.load(Ordering::Relaxed),
        saturation_checks: COUNTERS.saturation_checks.load(Ordering::Relaxed),
        saturation_failures: COUNTERS.saturation_failures.load(Ordering::Relaxed),
    }
}
