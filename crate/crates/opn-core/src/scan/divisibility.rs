//! The divisibility constraint `w | sigma(w^2)` (OEIS A232354) and the
//! prime-power shape of the quotient.

use rayon::prelude::*;

use super::classify::sigma_square_spf;
use super::range::with_pool;
use super::ScanError;
use crate::arith::{sigma_of_square, Factorization, SpfTable};

/// All `w` in `[2, limit]` with `w | sigma(w^2)`, in increasing order.
pub fn divides_sigma_square_scan(
    limit: u64,
    table: &SpfTable,
    threads: usize,
) -> Result<Vec<u64>, ScanError> {
    if limit < 2 || limit > table.limit() {
        return Err(ScanError::BadRange {
            lo: 2,
            hi: limit,
            table_limit: table.limit(),
        });
    }
    const BLOCK: u64 = 1 << 15;
    let starts: Vec<u64> = (2..=limit).step_by(BLOCK as usize).collect();
    let blocks = with_pool(threads, || {
        starts
            .into_par_iter()
            .map(|start| {
                let hi = (start + BLOCK - 1).min(limit);
                let mut hits = Vec::new();
                for w in start..=hi {
                    let sigma_sq = sigma_square_spf(w, table)
                        .map_err(|source| ScanError::Arith { m: w, source })?;
                    if sigma_sq % w as u128 == 0 {
                        hits.push(w);
                    }
                }
                Ok(hits)
            })
            .collect::<Result<Vec<_>, ScanError>>()
    })??;
    Ok(blocks.into_iter().flatten().collect())
}

/// The quotient `sigma(w^2) / w` and whether it is a prime power `d^e`
/// (`d` prime, `e >= 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimePowerQuotient {
    pub w: u64,
    pub quotient: u128,
    pub is_prime_power: bool,
}

/// Requires `w | sigma(w^2)`; a violation is an explicit error, not a
/// silent false.
pub fn prime_power_quotient(w: u64) -> Result<PrimePowerQuotient, ScanError> {
    let wrap = |source| ScanError::Arith { m: w, source };
    if w < 2 {
        return Err(ScanError::BadRange {
            lo: w,
            hi: w,
            table_limit: u64::MAX,
        });
    }
    let f = Factorization::of(w as u128).map_err(wrap)?;
    let sigma_sq = sigma_of_square(&f).map_err(wrap)?;
    if sigma_sq % w as u128 != 0 {
        return Err(ScanError::NotADivisor { w });
    }
    let quotient = sigma_sq / w as u128;
    let is_prime_power = if quotient < 2 {
        false
    } else {
        Factorization::of(quotient).map_err(wrap)?.distinct_primes() == 1
    };
    Ok(PrimePowerQuotient {
        w,
        quotient,
        is_prime_power,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_two_terms() {
        let table = SpfTable::build(1000).unwrap();
        assert_eq!(
            divides_sigma_square_scan(1000, &table, 0).unwrap(),
            vec![39, 793]
        );
    }

    #[test]
    fn below_the_first_term() {
        let table = SpfTable::build(38).unwrap();
        assert!(divides_sigma_square_scan(38, &table, 0).unwrap().is_empty());
    }

    #[test]
    fn quotients() {
        let q = prime_power_quotient(39).unwrap();
        assert_eq!((q.quotient, q.is_prime_power), (61, true));

        let q = prime_power_quotient(793).unwrap();
        assert_eq!((q.quotient, q.is_prime_power), (873, false)); // 873 = 3^2 * 97

        let q = prime_power_quotient(2379).unwrap();
        assert!(!q.is_prime_power);

        // 7 does not divide sigma(49) = 57.
        assert!(matches!(
            prime_power_quotient(7),
            Err(ScanError::NotADivisor { w: 7 })
        ));
        assert!(prime_power_quotient(1).is_err());
    }

    #[test]
    fn terms_all_divide_by_construction() {
        let table = SpfTable::build(10_000).unwrap();
        for w in divides_sigma_square_scan(10_000, &table, 0).unwrap() {
            let q = prime_power_quotient(w).unwrap();
            assert_eq!(q.w, w);
            assert!(q.quotient >= 2);
        }
    }
}
