//! Orchestration of scans into published-style tables, the local density
//! mechanism check, cube-root-of-unity congruences, and the Euler partial
//! product over primes `1 mod 6`.

mod density;
mod euler_product;
mod fixtures;
mod roots;

pub use density::{density_table, local_density_check, DensityRow, LocalDensityReport};
pub use euler_product::{meyerowitz_product, PartialProduct};
pub use fixtures::{descartes_candidate, descartes_params, descartes_triple};
pub use roots::{cyclotomic_roots, CubicRoots};

use crate::arith::ArithError;
use crate::scan::ScanError;
use thiserror::Error;

/// Errors raised by the experiment suite.
#[derive(Debug, Error)]
pub enum ExperimentError {
    /// `u^2 + u + 1 = 0 (mod p)` has no solution for this modulus.
    #[error("no roots modulo {0}")]
    NoRoots(u64),

    /// `p = 3` has only the degenerate double root `u = 1`.
    #[error("modulus 3 is degenerate: u^2+u+1 = (u-1)^2 (mod 3)")]
    DegenerateModulus,

    /// The modulus must be prime.
    #[error("{0} is not prime")]
    NotPrime(u64),

    /// Density-table limits must be strictly increasing.
    #[error("limits must be strictly increasing and positive")]
    LimitsNotIncreasing,

    /// A limit below the smallest meaningful value for the operation.
    #[error("limit {limit} below the minimum {minimum} for this operation")]
    LimitTooSmall { limit: u64, minimum: u64 },

    #[error(transparent)]
    Scan(#[from] ScanError),

    #[error(transparent)]
    Arith(#[from] ArithError),
}
