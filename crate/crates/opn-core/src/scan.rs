//! High-throughput classification of `m` by the equation
//! `gcd(m, sigma(m^2)) = gcd(m^2, sigma(m^2))`, the `w | sigma(w^2)`
//! search, and crash-safe checkpointed range scans.

mod checkpoint;
mod classify;
mod divisibility;
mod range;

pub use checkpoint::{
    scan_checkpointed, Checkpoint, CheckpointError, CheckpointedScanOptions, ScanOutcome,
    CHECKPOINT_SCHEMA_VERSION,
};
pub use classify::{classify, witness, PrimeValuation, SolutionClass};
pub use divisibility::{divides_sigma_square_scan, prime_power_quotient, PrimePowerQuotient};
pub use range::{scan_range, ScanOptions, ScanSummary, DEFAULT_NONSOLUTION_CAP};

pub(crate) use range::with_pool;

use crate::arith::ArithError;
use thiserror::Error;

/// Errors raised by the scan engine.
#[derive(Debug, Error)]
pub enum ScanError {
    /// Arithmetic failed while processing `m`; the offending value is part
    /// of the report so a segment abort is actionable.
    #[error("arithmetic failure at m = {m}: {source}")]
    Arith {
        m: u64,
        #[source]
        source: ArithError,
    },

    /// The requested range does not satisfy `1 <= lo <= hi <= table limit`.
    #[error("range [{lo}, {hi}] invalid for a table with limit {table_limit}")]
    BadRange { lo: u64, hi: u64, table_limit: u64 },

    /// `w` does not divide `sigma(w^2)`, so the quotient is undefined.
    #[error("{w} does not divide sigma({w}^2)")]
    NotADivisor { w: u64 },

    /// The worker pool could not be created.
    #[error("thread pool: {0}")]
    ThreadPool(String),

    #[error(transparent)]
    Arithmetic(#[from] ArithError),

    #[error(transparent)]
    Checkpoint(#[from] CheckpointError),
}
