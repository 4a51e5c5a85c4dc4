use super::{AbstractTriple, IdentityError, Verdict};
use crate::arith::{self, gcd, geometric_sum, is_prime, sigma, sigma_of_square, Factorization};

/// Raw, unvalidated candidate data: the input to [`spoof_check`] and to
/// [`EulerianCandidate::new`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CandidateParams {
    /// The square root of the even part: `N = q^k * n^2`.
    pub n: u128,
    /// The designated special factor; composite values are allowed when
    /// `quasi` is set.
    pub q: u128,
    /// Exponent of the special factor.
    pub k: u32,
    /// When set, `sigma(q^k)` is evaluated as the geometric series
    /// `(q^(k+1) - 1)/(q - 1)` even if `q` is composite — the spoof rule.
    /// All other factors always use the true divisor sum.
    pub quasi: bool,
    /// When set, additionally require `q` prime, `q = 1 (mod 4)`,
    /// `k = 1 (mod 4)`.
    pub strict: bool,
}

/// Per-condition outcome of a spoof check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpoofReport {
    pub checks: Vec<Verdict>,
}

impl SpoofReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|v| v.passed)
    }
}

/// `sigma(q^k)` under the candidate's rule: geometric series when `quasi`,
/// true divisor sum otherwise.
fn special_sigma(q: u128, k: u32, quasi: bool) -> Result<u128, IdentityError> {
    if quasi {
        return geometric_sum(q, k + 1).map_err(IdentityError::from);
    }
    let f = Factorization::of(arith::pow_capped(q, k)?)?;
    sigma(&f).map_err(IdentityError::from)
}

/// Verifies the perfection equation `sigma(q^k) * sigma(n^2) = 2 q^k n^2`
/// and, in strict mode, the Eulerian-form side conditions. Every violated
/// condition is reported as its own failed verdict.
pub fn spoof_check(params: &CandidateParams) -> Result<SpoofReport, IdentityError> {
    let mut checks = Vec::new();
    let CandidateParams {
        n,
        q,
        k,
        quasi,
        strict,
    } = *params;

    if n == 0 || q == 0 || k == 0 {
        return Err(IdentityError::InvalidCandidate(
            "n, q, and k must all be positive".into(),
        ));
    }

    checks.push(Verdict::from_bool("n odd", n % 2 == 1, || {
        format!("n = {n} is even")
    }));
    checks.push(Verdict::from_bool("gcd(q, n) = 1", gcd(q, n) == 1, || {
        format!("gcd({q}, {n}) = {}", gcd(q, n))
    }));

    let n_factors = Factorization::of(n)?;
    let sigma_special = special_sigma(q, k, quasi)?;
    let sigma_n_sq = sigma_of_square(&n_factors)?;
    let lhs = arith::mul_capped(sigma_special, sigma_n_sq)?;
    let q_pow_k = arith::pow_capped(q, k)?;
    let n_sq = arith::mul_capped(n, n)?;
    let rhs = arith::mul_capped(2, arith::mul_capped(q_pow_k, n_sq)?)?;
    checks.push(Verdict::from_bool(
        "perfection: sigma(q^k)*sigma(n^2) = 2*q^k*n^2",
        lhs == rhs,
        || format!("{lhs} != {rhs}"),
    ));

    if strict {
        checks.push(Verdict::from_bool("q prime", is_prime(q)?, || {
            format!("q = {q} is composite")
        }));
        checks.push(Verdict::from_bool("q = 1 (mod 4)", q % 4 == 1, || {
            format!("q = {q} = {} (mod 4)", q % 4)
        }));
        checks.push(Verdict::from_bool("k = 1 (mod 4)", k % 4 == 1, || {
            format!("k = {k} = {} (mod 4)", k % 4)
        }));
    }

    Ok(SpoofReport { checks })
}

/// A validated (possibly spoof) odd perfect candidate `q^k * n^2`.
///
/// Construction rejects anything failing the perfection equation, plus the
/// strict-mode conditions when requested, so a value of this type always
/// carries a consistent index chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerianCandidate {
    n_factors: Factorization,
    n: u128,
    q: u128,
    k: u32,
    quasi: bool,
    strict: bool,
}

impl EulerianCandidate {
    pub fn new(params: CandidateParams) -> Result<Self, IdentityError> {
        let report = spoof_check(&params)?;
        if let Some(bad) = report.checks.iter().find(|v| !v.passed) {
            if bad.name.starts_with("perfection") {
                // Reconstruct the numbers for the dedicated error.
                let sigma_special = special_sigma(params.q, params.k, params.quasi)?;
                let n_factors = Factorization::of(params.n)?;
                let lhs = arith::mul_capped(sigma_special, sigma_of_square(&n_factors)?)?;
                let rhs = arith::mul_capped(
                    2,
                    arith::mul_capped(
                        arith::pow_capped(params.q, params.k)?,
                        arith::mul_capped(params.n, params.n)?,
                    )?,
                )?;
                return Err(IdentityError::PerfectionFailed { lhs, rhs });
            }
            return Err(IdentityError::InvalidCandidate(format!(
                "{}: {}",
                bad.name, bad.detail
            )));
        }
        Ok(EulerianCandidate {
            n_factors: Factorization::of(params.n)?,
            n: params.n,
            q: params.q,
            k: params.k,
            quasi: params.quasi,
            strict: params.strict,
        })
    }

    pub fn n(&self) -> u128 {
        self.n
    }

    pub fn q(&self) -> u128 {
        self.q
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn quasi(&self) -> bool {
        self.quasi
    }

    pub fn n_factors(&self) -> &Factorization {
        &self.n_factors
    }

    pub fn params(&self) -> CandidateParams {
        CandidateParams {
            n: self.n,
            q: self.q,
            k: self.k,
            quasi: self.quasi,
            strict: self.strict,
        }
    }

    /// The abstract triple this candidate induces, with the index taken
    /// from `gcd(n^2, sigma(n^2))`.
    pub fn to_triple(&self) -> Result<AbstractTriple, IdentityError> {
        let chain = self.index_chain()?;
        AbstractTriple::new(self.n, chain.value, self.q, self.k)
    }

    /// Evaluates the six expressions for the index and checks they agree:
    ///
    /// 1. `sigma(n^2) / q^k`
    /// 2. `2 n^2 / sigma(q^k)`
    /// 3. `D(n^2) / s(q^k)`  (deficiency over aliquot sum)
    /// 4. `2 s(n^2) / D(q^k)`
    /// 5. `q sigma(n^2) - 2 (q - 1) n^2`
    /// 6. `gcd(n^2, sigma(n^2))`
    ///
    /// `sigma` on the special factor follows the candidate's quasi rule.
    pub fn index_chain(&self) -> Result<IndexChain, IdentityError> {
        let q_pow_k = arith::pow_capped(self.q, self.k)?;
        let n_sq = arith::mul_capped(self.n, self.n)?;
        let sigma_n_sq = sigma_of_square(&self.n_factors)?;
        let sigma_q = special_sigma(self.q, self.k, self.quasi)?;

        let exact = |name: &'static str, num: u128, den: u128| -> Result<u128, IdentityError> {
            arith::div_exact(num, den).ok_or(IdentityError::ChainDivision { member: name })
        };

        let m1 = exact("sigma(n^2)/q^k", sigma_n_sq, q_pow_k)?;
        let m2 = exact("2n^2/sigma(q^k)", arith::mul_capped(2, n_sq)?, sigma_q)?;
        // D(n^2) = 2n^2 - sigma(n^2); s(q^k) = sigma(q^k) - q^k. Perfection
        // keeps both positive for any candidate that got constructed.
        let deficiency_n_sq = arith::mul_capped(2, n_sq)?.checked_sub(sigma_n_sq).ok_or(
            IdentityError::ChainDivision {
                member: "D(n^2)/s(q^k)",
            },
        )?;
        let aliquot_q = sigma_q
            .checked_sub(q_pow_k)
            .ok_or(IdentityError::ChainDivision {
                member: "D(n^2)/s(q^k)",
            })?;
        let m3 = exact("D(n^2)/s(q^k)", deficiency_n_sq, aliquot_q)?;
        let aliquot_n_sq = sigma_n_sq - n_sq;
        let deficiency_q = arith::mul_capped(2, q_pow_k)?.checked_sub(sigma_q).ok_or(
            IdentityError::ChainDivision {
                member: "2s(n^2)/D(q^k)",
            },
        )?;
        let m4 = exact(
            "2s(n^2)/D(q^k)",
            arith::mul_capped(2, aliquot_n_sq)?,
            deficiency_q,
        )?;
        let m5 = arith::mul_capped(self.q, sigma_n_sq)?
            .checked_sub(arith::mul_capped(arith::mul_capped(2, self.q - 1)?, n_sq)?)
            .ok_or(IdentityError::ChainDivision {
                member: "q*sigma(n^2)-2(q-1)n^2",
            })?;
        let m6 = gcd(n_sq, sigma_n_sq);

        let members = vec![
            ("sigma(n^2)/q^k", m1),
            ("2n^2/sigma(q^k)", m2),
            ("D(n^2)/s(q^k)", m3),
            ("2s(n^2)/D(q^k)", m4),
            ("q*sigma(n^2)-2(q-1)n^2", m5),
            ("gcd(n^2,sigma(n^2))", m6),
        ];
        let value = m1;
        let verdict = Verdict::from_bool(
            "index chain agreement",
            members.iter().all(|&(_, v)| v == value),
            || {
                members
                    .iter()
                    .map(|(name, v)| format!("{name} = {v}"))
                    .collect::<Vec<_>>()
                    .join(", ")
            },
        );
        Ok(IndexChain {
            members,
            value,
            verdict,
        })
    }
}

/// All six index expressions, their common value, and the agreement verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexChain {
    pub members: Vec<(&'static str, u128)>,
    pub value: u128,
    pub verdict: Verdict,
}
