use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::classify::sigma_square_spf;
use super::ScanError;
use crate::arith::{gcd, SpfTable};

/// Non-solution lists longer than this are truncated to a rolling tail.
pub const DEFAULT_NONSOLUTION_CAP: usize = 1_000_000;

/// Work is split into blocks of this many values of `m` for the pool.
const BLOCK: u64 = 1 << 15;

/// Tuning for a range scan.
#[derive(Debug, Clone)]
pub struct ScanOptions {
    /// Worker threads; 0 means the rayon default for this host.
    pub threads: usize,
    /// Retention cap for the non-solution list.
    pub nonsolution_cap: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            threads: 0,
            nonsolution_cap: DEFAULT_NONSOLUTION_CAP,
        }
    }
}

/// Outcome of classifying a contiguous range of `m`.
///
/// `nonsolutions` is always in increasing order regardless of how many
/// worker threads produced it. When the list would exceed the cap, only
/// the most recent `cap` entries are retained and `truncated` is set;
/// `solution_count + (hi - lo + 1 - solution_count)` totals are unaffected.
#[derive(Debug, Clone)]
pub struct ScanSummary {
    pub lo: u64,
    pub hi: u64,
    pub solution_count: u64,
    pub nonsolutions: Vec<u64>,
    pub truncated: bool,
    pub cap: usize,
    pub elapsed: Duration,
}

impl ScanSummary {
    /// Number of non-solutions in the range (independent of truncation).
    pub fn nonsolution_count(&self) -> u64 {
        (self.hi - self.lo + 1) - self.solution_count
    }

    /// The deterministic payload: everything except the timing.
    pub fn records(&self) -> (u64, u64, u64, &[u64], bool) {
        (
            self.lo,
            self.hi,
            self.solution_count,
            &self.nonsolutions,
            self.truncated,
        )
    }
}

/// Per-block result: solutions counted, non-solutions listed.
pub(crate) struct BlockResult {
    pub(crate) solutions: u64,
    pub(crate) nonsolutions: Vec<u64>,
}

/// Classifies one block sequentially. The gcds are taken against the
/// exponent-doubled sigma; `g1 | g2` is a structural invariant and is
/// asserted in debug builds.
pub(crate) fn classify_block(lo: u64, hi: u64, table: &SpfTable) -> Result<BlockResult, ScanError> {
    let mut solutions = 0u64;
    let mut nonsolutions = Vec::new();
    for m in lo..=hi {
        if m == 1 {
            solutions += 1; // g1 = g2 = 1
            continue;
        }
        let sigma_sq =
            sigma_square_spf(m, table).map_err(|source| ScanError::Arith { m, source })?;
        let m_wide = m as u128;
        let g1 = gcd(m_wide, sigma_sq);
        let g2 = gcd(m_wide * m_wide, sigma_sq);
        debug_assert_eq!(g2 % g1, 0, "g1 | g2 violated at m = {m}");
        if g1 == g2 {
            solutions += 1;
        } else {
            nonsolutions.push(m);
        }
    }
    Ok(BlockResult {
        solutions,
        nonsolutions,
    })
}

/// Runs `f` on a pool with the requested width (0 = rayon default).
pub(crate) fn with_pool<T: Send>(
    threads: usize,
    f: impl FnOnce() -> T + Send,
) -> Result<T, ScanError> {
    if threads == 0 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| ScanError::ThreadPool(e.to_string()))?;
    Ok(pool.install(f))
}

/// Splits `[lo, hi]` into blocks, classifies them in parallel, and merges
/// the results in block order, so the output is identical for any thread
/// count.
pub(crate) fn scan_blocks(
    lo: u64,
    hi: u64,
    table: &SpfTable,
) -> Result<Vec<BlockResult>, ScanError> {
    let starts: Vec<u64> = (lo..=hi).step_by(BLOCK as usize).collect();
    starts
        .into_par_iter()
        .map(|start| classify_block(start, (start + BLOCK - 1).min(hi), table))
        .collect()
}

/// Deterministic classification summary for `[lo, hi]`.
pub fn scan_range(
    lo: u64,
    hi: u64,
    table: &SpfTable,
    opts: &ScanOptions,
) -> Result<ScanSummary, ScanError> {
    if lo < 1 || lo > hi || hi > table.limit() {
        return Err(ScanError::BadRange {
            lo,
            hi,
            table_limit: table.limit(),
        });
    }
    let started = Instant::now();
    let blocks = with_pool(opts.threads, || scan_blocks(lo, hi, table))??;

    let mut summary = ScanSummary {
        lo,
        hi,
        solution_count: 0,
        nonsolutions: Vec::new(),
        truncated: false,
        cap: opts.nonsolution_cap,
        elapsed: Duration::ZERO,
    };
    for block in blocks {
        merge_block(&mut summary, block, opts.nonsolution_cap);
    }
    summary.elapsed = started.elapsed();
    Ok(summary)
}

/// Folds one block into the running summary, enforcing the retention cap
/// as a rolling tail (oldest entries are dropped first).
pub(crate) fn merge_block(summary: &mut ScanSummary, block: BlockResult, cap: usize) {
    summary.solution_count += block.solutions;
    summary.nonsolutions.extend(block.nonsolutions);
    if summary.nonsolutions.len() > cap {
        let excess = summary.nonsolutions.len() - cap;
        summary.nonsolutions.drain(..excess);
        summary.truncated = true;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The 26 non-solutions below 1000.
    pub(crate) const NONSOLUTIONS_1000: [u64; 26] = [
        99, 154, 198, 273, 322, 396, 399, 462, 469, 495, 518, 546, 553, 620, 651, 693, 741, 742,
        770, 777, 792, 798, 903, 938, 966, 990,
    ];

    #[test]
    fn scan_to_1000_matches_published_list() {
        let table = SpfTable::build(1000).unwrap();
        let s = scan_range(1, 1000, &table, &ScanOptions::default()).unwrap();
        assert_eq!(s.solution_count, 974);
        assert_eq!(s.nonsolutions, NONSOLUTIONS_1000);
        assert!(!s.truncated);
        assert_eq!(s.solution_count + s.nonsolutions.len() as u64, 1000);
    }

    #[test]
    fn small_prefixes() {
        let table = SpfTable::build(100).unwrap();
        let s = scan_range(1, 10, &table, &ScanOptions::default()).unwrap();
        assert_eq!(s.solution_count, 10);
        let s = scan_range(1, 100, &table, &ScanOptions::default()).unwrap();
        assert_eq!(s.solution_count, 99);
        assert_eq!(s.nonsolutions, vec![99]);
    }

    #[test]
    fn subranges_compose() {
        let table = SpfTable::build(1000).unwrap();
        let whole = scan_range(1, 1000, &table, &ScanOptions::default()).unwrap();
        let a = scan_range(1, 499, &table, &ScanOptions::default()).unwrap();
        let b = scan_range(500, 1000, &table, &ScanOptions::default()).unwrap();
        assert_eq!(whole.solution_count, a.solution_count + b.solution_count);
        let mut joined = a.nonsolutions.clone();
        joined.extend(&b.nonsolutions);
        assert_eq!(whole.nonsolutions, joined);
    }

    #[test]
    fn thread_counts_do_not_change_output() {
        let table = SpfTable::build(50_000).unwrap();
        let base = scan_range(1, 50_000, &table, &ScanOptions::default()).unwrap();
        for threads in [1usize, 2, 8] {
            let opts = ScanOptions {
                threads,
                ..Default::default()
            };
            let s = scan_range(1, 50_000, &table, &opts).unwrap();
            assert_eq!(s.records(), base.records(), "threads = {threads}");
        }
    }

    #[test]
    fn cap_keeps_a_rolling_tail() {
        let table = SpfTable::build(1000).unwrap();
        let opts = ScanOptions {
            threads: 0,
            nonsolution_cap: 5,
        };
        let s = scan_range(1, 1000, &table, &opts).unwrap();
        assert!(s.truncated);
        assert_eq!(s.nonsolutions, &NONSOLUTIONS_1000[21..]);
        assert_eq!(s.solution_count, 974);
        assert_eq!(s.nonsolution_count(), 26);
    }

    #[test]
    fn bad_ranges_are_rejected() {
        let table = SpfTable::build(100).unwrap();
        assert!(scan_range(0, 10, &table, &ScanOptions::default()).is_err());
        assert!(scan_range(5, 4, &table, &ScanOptions::default()).is_err());
        assert!(scan_range(1, 101, &table, &ScanOptions::default()).is_err());
    }
}
