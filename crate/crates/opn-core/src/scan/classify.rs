use super::ScanError;
use crate::arith::{gcd, geometric_sum, sigma_of_square, Factorization, SpfTable};

/// Classification of one `m` against `gcd(m, sigma(m^2)) = gcd(m^2, sigma(m^2))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolutionClass {
    pub m: u64,
    /// `gcd(m, sigma(m^2))`.
    pub g1: u128,
    /// `gcd(m^2, sigma(m^2))`; `g1` always divides `g2`.
    pub g2: u128,
    pub is_solution: bool,
}

/// `sigma(m^2)` from the smallest-prime-factor table, by exponent doubling.
///
/// The square is never materialized; each prime power `p^e` of `m`
/// contributes `1 + p + ... + p^(2e)`.
#[inline]
pub(crate) fn sigma_square_spf(
    mut m: u64,
    table: &SpfTable,
) -> Result<u128, crate::arith::ArithError> {
    let mut acc: u128 = 1;
    while m > 1 {
        let p = table.spf(m) as u64;
        let mut e = 0u32;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        acc = crate::arith::mul_capped(acc, geometric_sum(p as u128, 2 * e + 1)?)?;
    }
    Ok(acc)
}

/// Classifies `m`; requires `1 <= m <= table.limit()`.
pub fn classify(m: u64, table: &SpfTable) -> Result<SolutionClass, ScanError> {
    if m == 0 || m > table.limit() {
        return Err(ScanError::BadRange {
            lo: m,
            hi: m,
            table_limit: table.limit(),
        });
    }
    let sigma_sq = sigma_square_spf(m, table).map_err(|source| ScanError::Arith { m, source })?;
    let m_wide = m as u128;
    let g1 = gcd(m_wide, sigma_sq);
    let g2 = gcd(m_wide * m_wide, sigma_sq);
    debug_assert_eq!(g2 % g1, 0, "g1 must divide g2");
    Ok(SolutionClass {
        m,
        g1,
        g2,
        is_solution: g1 == g2,
    })
}

/// One prime where the two gcd valuations differ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeValuation {
    pub p: u64,
    /// Exponent of `p` in `gcd(m, sigma(m^2))`.
    pub a: u32,
    /// Exponent of `p` in `gcd(m^2, sigma(m^2))`.
    pub b: u32,
}

/// Explains why `m` fails (or confirms it satisfies) the gcd equation.
///
/// For each prime `p | m`, the valuations of the two gcds are
/// `min(v_p(m), v_p(sigma(m^2)))` and `min(2 v_p(m), v_p(sigma(m^2)))`;
/// a pair is emitted whenever they differ. The list is empty exactly when
/// `m` is a solution.
pub fn witness(m: u64) -> Result<Vec<PrimeValuation>, ScanError> {
    if m < 2 {
        return Err(ScanError::BadRange {
            lo: m,
            hi: m,
            table_limit: u64::MAX,
        });
    }
    let wrap = |source| ScanError::Arith { m, source };
    let f = Factorization::of(m as u128).map_err(wrap)?;
    let sigma_sq = sigma_of_square(&f).map_err(wrap)?;

    let mut out = Vec::new();
    for &(p, e) in f.factors() {
        let mut v = 0u32;
        let mut rest = sigma_sq;
        while rest % p as u128 == 0 {
            rest /= p as u128;
            v += 1;
        }
        let a = e.min(v);
        let b = (2 * e).min(v);
        if a != b {
            out.push(PrimeValuation { p, a, b });
        }
    }
    Ok(out)
}
