//! The invariant engine for Eulerian-form data.
//!
//! Everything here operates on abstract inputs `(n, i, q, k)` satisfying
//! `n` odd, `i` odd, `i | n^2`, `gcd(q, 2n^2) = 1`: exactly the arithmetic
//! skeleton an odd perfect number `q^k n^2` would induce with
//! `sigma(q^k) = 2n^2 / i` and `sigma(n^2) = q^k i`. The identities proved
//! for hypothetical odd perfect numbers hold on this whole domain, which is
//! what makes them testable; the engine computes both the direct GCDs and
//! the closed forms and insists they agree.

mod candidate;
mod profile;
mod triple;

pub use candidate::{spoof_check, CandidateParams, EulerianCandidate, IndexChain, SpoofReport};
pub use profile::{
    equivalent_conditions_one, equivalent_conditions_two, gcd_profile, k_bound_and_corollary,
    squarefree_theorems, verify_all, verify_core_lemmas, verify_j_formula, EquivalenceReport,
    GcdProfile,
};
pub use triple::{AbstractTriple, TripleSampler};

use crate::arith::ArithError;
use thiserror::Error;

/// Errors raised by the identity engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error(transparent)]
    Arith(#[from] ArithError),

    /// An input violated the abstract-triple invariants.
    #[error("invalid triple: {0}")]
    InvalidTriple(String),

    /// A closed form disagreed with the direct GCD computation. This
    /// signals an implementation bug, never a property of the input.
    #[error("identity cross-check failed: {identity} gave {closed} against direct value {direct}")]
    CrossCheck {
        identity: &'static str,
        direct: u128,
        closed: u128,
    },

    /// A candidate failed the perfection equation at construction.
    #[error("perfection fails: sigma(q^k) * sigma(n^2) = {lhs} but 2 q^k n^2 = {rhs}")]
    PerfectionFailed { lhs: u128, rhs: u128 },

    /// A candidate violated a structural requirement.
    #[error("invalid candidate: {0}")]
    InvalidCandidate(String),

    /// An index-chain member could not be evaluated exactly (inexact
    /// division or a negative intermediate).
    #[error("index chain member {member} does not evaluate exactly")]
    ChainDivision { member: &'static str },
}

/// Outcome of one named identity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub name: &'static str,
    pub passed: bool,
    /// Human-readable explanation, populated on failure.
    pub detail: String,
}

impl Verdict {
    pub fn pass(name: &'static str) -> Self {
        Verdict {
            name,
            passed: true,
            detail: String::new(),
        }
    }

    pub fn fail(name: &'static str, detail: String) -> Self {
        Verdict {
            name,
            passed: false,
            detail,
        }
    }

    pub fn from_bool(name: &'static str, passed: bool, detail: impl FnOnce() -> String) -> Self {
        if passed {
            Verdict::pass(name)
        } else {
            Verdict::fail(name, detail())
        }
    }
}

/// True when every verdict in the slice passed.
pub fn all_passed(verdicts: &[Verdict]) -> bool {
    verdicts.iter().all(|v| v.passed)
}
