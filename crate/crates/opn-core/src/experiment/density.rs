use rayon::prelude::*;

use super::ExperimentError;
use crate::arith::{Rational, SpfTable};
use crate::decimal::render_sig;
use crate::scan::{classify, ScanError};

/// One row of the solution-density table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DensityRow {
    pub limit: u64,
    pub count: u64,
}

impl DensityRow {
    /// The percentage `100 * count / limit` as an exact rational.
    pub fn percentage(&self) -> Rational {
        Rational::new(100 * self.count as u128, self.limit as u128).expect("limit is positive")
    }

    /// Decimal rendering of the percentage: 6 significant digits,
    /// round-half-even, trailing zeros trimmed.
    pub fn percentage_decimal(&self) -> String {
        render_sig(100 * self.count as u128, self.limit as u128, 6)
    }
}

const COUNT_BLOCK: u64 = 1 << 15;

/// Counts solutions in `[lo, hi]` without retaining them.
fn count_solutions(lo: u64, hi: u64, table: &SpfTable) -> Result<u64, ScanError> {
    let starts: Vec<u64> = (lo..=hi).step_by(COUNT_BLOCK as usize).collect();
    let counts = starts
        .into_par_iter()
        .map(|start| {
            let end = (start + COUNT_BLOCK - 1).min(hi);
            let mut c = 0u64;
            for m in start..=end {
                if classify(m, table)?.is_solution {
                    c += 1;
                }
            }
            Ok(c)
        })
        .collect::<Result<Vec<u64>, ScanError>>()?;
    Ok(counts.into_iter().sum())
}

/// Builds one density row per limit from a single pass to the largest one.
pub fn density_table(
    limits: &[u64],
    table: &SpfTable,
    threads: usize,
) -> Result<Vec<DensityRow>, ExperimentError> {
    if limits.is_empty() || limits[0] == 0 || limits.windows(2).any(|w| w[0] >= w[1]) {
        return Err(ExperimentError::LimitsNotIncreasing);
    }
    let rows = crate::scan::with_pool(threads, || -> Result<Vec<DensityRow>, ScanError> {
        let mut rows = Vec::with_capacity(limits.len());
        let mut previous = 0u64;
        let mut running = 0u64;
        for &limit in limits {
            running += count_solutions(previous + 1, limit, table)?;
            rows.push(DensityRow {
                limit,
                count: running,
            });
            previous = limit;
        }
        Ok(rows)
    })??;
    Ok(rows)
}

/// Report on the family `3^2 * 11 || m` that drives the density bound.
#[derive(Debug, Clone)]
pub struct LocalDensityReport {
    pub limit: u64,
    /// Description of the divisibility pattern counted.
    pub pattern: &'static str,
    pub observed_count: u64,
    /// The asymptotic density of the pattern, `(2/27) * (10/121) = 20/3267`.
    pub expected_density: Rational,
    /// `|observed - limit * 20/3267| / (limit * 20/3267)`, exact.
    pub relative_error: Rational,
    /// Whether every counted `m` classified as a non-solution.
    pub all_nonsolutions: bool,
}

/// Counts `m <= limit` with `v_3(m) = 2` and `v_11(m) = 1`, checks the
/// count against the expected density `20/3267`, and verifies that each
/// such `m` fails the gcd equation.
pub fn local_density_check(
    limit: u64,
    table: &SpfTable,
) -> Result<LocalDensityReport, ExperimentError> {
    const MINIMUM: u64 = 3267;
    if limit < MINIMUM {
        return Err(ExperimentError::LimitTooSmall {
            limit,
            minimum: MINIMUM,
        });
    }
    if limit > table.limit() {
        return Err(ExperimentError::Scan(ScanError::BadRange {
            lo: 1,
            hi: limit,
            table_limit: table.limit(),
        }));
    }

    let mut observed = 0u64;
    let mut all_nonsolutions = true;
    let mut m = 99;
    while m <= limit {
        if m % 27 != 0 && m % 121 != 0 {
            observed += 1;
            if classify(m, table)?.is_solution {
                all_nonsolutions = false;
            }
        }
        m += 99;
    }

    // Exact relative error against limit * 20/3267.
    let expected_num = 20u128 * limit as u128; // over 3267
    let observed_scaled = observed as u128 * 3267;
    let diff = expected_num.abs_diff(observed_scaled);
    let relative_error = Rational::new(diff, expected_num)?;

    Ok(LocalDensityReport {
        limit,
        pattern: "3^2 * 11 exactly divides m",
        observed_count: observed,
        expected_density: Rational::new(20, 3267)?,
        relative_error,
        all_nonsolutions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_for_small_limits() {
        let table = SpfTable::build(1000).unwrap();
        let rows = density_table(&[10, 100, 1000], &table, 0).unwrap();
        assert_eq!(
            rows,
            vec![
                DensityRow {
                    limit: 10,
                    count: 10
                },
                DensityRow {
                    limit: 100,
                    count: 99
                },
                DensityRow {
                    limit: 1000,
                    count: 974
                },
            ]
        );
        assert_eq!(rows[0].percentage_decimal(), "100");
        assert_eq!(rows[1].percentage_decimal(), "99");
        assert_eq!(rows[2].percentage_decimal(), "97.4");
    }

    #[test]
    fn trivial_row() {
        let table = SpfTable::build(10).unwrap();
        let rows = density_table(&[1], &table, 0).unwrap();
        assert_eq!(rows, vec![DensityRow { limit: 1, count: 1 }]);
        assert_eq!(rows[0].percentage_decimal(), "100");
    }

    #[test]
    fn percentage_is_exact() {
        let row = DensityRow {
            limit: 1_000_000,
            count: 923_464,
        };
        let pct = row.percentage();
        // percentage * limit = 100 * count exactly.
        assert_eq!(pct.numerator() * 1_000_000 % pct.denominator(), 0);
        assert_eq!(
            pct.numerator() * 1_000_000 / pct.denominator(),
            100 * 923_464
        );
        assert_eq!(row.percentage_decimal(), "92.3464");
    }

    #[test]
    fn limits_must_increase() {
        let table = SpfTable::build(100).unwrap();
        assert!(density_table(&[10, 10], &table, 0).is_err());
        assert!(density_table(&[20, 10], &table, 0).is_err());
        assert!(density_table(&[], &table, 0).is_err());
        assert!(density_table(&[0, 10], &table, 0).is_err());
    }

    #[test]
    fn local_density_small() {
        let table = SpfTable::build(10_000).unwrap();
        let report = local_density_check(10_000, &table).unwrap();
        // Exact count by the floor formula:
        // |{m: 99|m}| - |{m: 297|m}| - |{m: 1089|m}| + |{m: 3267|m}|.
        let oracle = 10_000 / 99 - 10_000 / 297 - 10_000 / 1089 + 10_000 / 3267;
        assert_eq!(report.observed_count, oracle);
        assert!(report.all_nonsolutions);
        assert_eq!(report.expected_density.to_string(), "20/3267");
        assert!(local_density_check(3266, &table).is_err());
    }
}
