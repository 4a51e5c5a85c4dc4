//! The built-in Descartes spoof, the one classical instance on which every
//! identity in the engine can be exercised with a genuine perfection
//! equation.
//!
//! `n = 3003 = 3 * 7 * 11 * 13`, special factor `q = 22021 = 19^2 * 61`
//! treated as if prime (the quasi rule), `k = 1`. Then
//! `sigma(q) "=" 22022`, `sigma(n^2) = 18035199`, and
//! `22022 * 18035199 = 2 * 22021 * 9018009` holds exactly.

use crate::identity::{AbstractTriple, CandidateParams, EulerianCandidate};

/// Raw parameters of the Descartes spoof (quasi mode, non-strict).
pub fn descartes_params() -> CandidateParams {
    CandidateParams {
        n: 3003,
        q: 22021,
        k: 1,
        quasi: true,
        strict: false,
    }
}

/// The validated Descartes candidate.
pub fn descartes_candidate() -> EulerianCandidate {
    EulerianCandidate::new(descartes_params()).expect("the Descartes spoof satisfies perfection")
}

/// The abstract triple the spoof induces: `(n, i, q, k) = (3003, 819, 22021, 1)`.
pub fn descartes_triple() -> AbstractTriple {
    AbstractTriple::new(3003, 819, 22021, 1).expect("fixture invariants hold")
}
