//! Exact integer machinery for studying the GCD invariants of (spoof) odd
//! perfect numbers given in Eulerian form `q^k * n^2`, plus the bulk range
//! scans that measure how often `gcd(m, sigma(m^2)) = gcd(m^2, sigma(m^2))`
//! holds and which `w` satisfy `w | sigma(w^2)`.
//!
//! The crate is organized around four layers:
//!
//! * [`arith`] — exact arithmetic: capped 127-bit naturals, deterministic
//!   64-bit primality, factorization, divisor sums, and the smallest-prime-
//!   factor sieve that powers the scans.
//! * [`identity`] — the invariant engine: given abstract Eulerian data
//!   `(n, i, q, k)` it computes the tuple `(E, F, K, G, H, I, J)` and checks
//!   every identity relating them (`G*H = I^2`, `H = G*J^2`, closed forms,
//!   equivalence predicates, squarefree implications, bounds).
//! * [`scan`] — high-throughput classification of ranges of `m`, with
//!   deterministic parallel merging and crash-safe checkpointing.
//! * [`experiment`] — the orchestration layer: solution-density tables,
//!   the local density check for `3^2 * 11 || m`, cube-root-of-unity
//!   congruences, and the Euler partial product over primes `1 mod 6`.
//!
//! All results are exact; any intermediate that would exceed `2^127 - 1`
//! is reported as an overflow error instead of wrapping.

pub mod arith;
pub mod decimal;
pub mod experiment;
pub mod identity;
pub mod scan;

pub use arith::{ArithError, Factorization, Natural, Rational, SpfTable};
pub use experiment::{CubicRoots, DensityRow, ExperimentError, LocalDensityReport, PartialProduct};
pub use identity::{
    AbstractTriple, CandidateParams, EulerianCandidate, GcdProfile, IdentityError, IndexChain,
    SpoofReport, TripleSampler, Verdict,
};
pub use scan::{
    Checkpoint, CheckpointError, PrimePowerQuotient, PrimeValuation, ScanError, ScanOptions,
    ScanOutcome, ScanSummary, SolutionClass,
};
