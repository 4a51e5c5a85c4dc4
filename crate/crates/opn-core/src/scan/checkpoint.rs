//! Crash-safe checkpointing for long scans.
//!
//! The checkpoint is a line-oriented text file carrying a schema version,
//! the scan geometry, the running tallies, and the retained non-solution
//! records (one per line). Writes go to a sibling temp file which is then
//! renamed over the target, so a kill at any moment leaves either the old
//! checkpoint or the new one, never a torn file. Only whole segments are
//! ever recorded.

use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use thiserror::Error;

use super::range::{merge_block, scan_blocks, ScanSummary, DEFAULT_NONSOLUTION_CAP};
use super::ScanError;
use crate::arith::SpfTable;

/// Version stamp written into every checkpoint file.
pub const CHECKPOINT_SCHEMA_VERSION: u32 = 1;

const MAGIC: &str = "opn-scan-checkpoint";

/// Errors specific to checkpoint persistence.
#[derive(Debug, Error)]
pub enum CheckpointError {
    #[error("checkpoint io for {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("corrupt checkpoint {path}: {reason}")]
    Corrupt { path: PathBuf, reason: String },

    #[error("checkpoint {path} has schema version {found}, expected {expected}")]
    VersionMismatch {
        path: PathBuf,
        found: u32,
        expected: u32,
    },

    #[error("checkpoint {path} was written for {field} = {stored}, run requested {requested}")]
    ParameterMismatch {
        path: PathBuf,
        field: &'static str,
        stored: u64,
        requested: u64,
    },

    #[error("checkpoint {path} already exists; pass resume=true or remove it")]
    AlreadyExists { path: PathBuf },
}

/// Resumable state of a checkpointed scan over `[1, limit]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Checkpoint {
    pub schema_version: u32,
    pub limit: u64,
    pub segment_size: u64,
    /// Largest `m` fully processed; a multiple of `segment_size`, or `limit`.
    pub completed_frontier: u64,
    /// Solutions counted in `[1, completed_frontier]`.
    pub running_count: u64,
    /// Retained non-solution records (a rolling tail when truncated).
    pub nonsolutions: Vec<u64>,
    pub truncated: bool,
}

impl Checkpoint {
    fn fresh(limit: u64, segment_size: u64) -> Self {
        Checkpoint {
            schema_version: CHECKPOINT_SCHEMA_VERSION,
            limit,
            segment_size,
            completed_frontier: 0,
            running_count: 0,
            nonsolutions: Vec::new(),
            truncated: false,
        }
    }

    fn validate(&self, path: &Path) -> Result<(), CheckpointError> {
        let corrupt = |reason: String| CheckpointError::Corrupt {
            path: path.to_path_buf(),
            reason,
        };
        if self.segment_size == 0 || self.limit == 0 {
            return Err(corrupt("limit and segment size must be positive".into()));
        }
        let on_boundary = self.completed_frontier % self.segment_size == 0
            || self.completed_frontier == self.limit;
        if !on_boundary || self.completed_frontier > self.limit {
            return Err(corrupt(format!(
                "frontier {} is not a segment boundary of {} within limit {}",
                self.completed_frontier, self.segment_size, self.limit
            )));
        }
        if self.running_count > self.completed_frontier {
            return Err(corrupt(format!(
                "running count {} exceeds frontier {}",
                self.running_count, self.completed_frontier
            )));
        }
        let found = self.completed_frontier - self.running_count;
        if !self.truncated && self.nonsolutions.len() as u64 != found {
            return Err(corrupt(format!(
                "{} records listed but tallies imply {}",
                self.nonsolutions.len(),
                found
            )));
        }
        if self.nonsolutions.windows(2).any(|w| w[0] >= w[1]) {
            return Err(corrupt("non-solution records out of order".into()));
        }
        Ok(())
    }

    /// Atomically persists the checkpoint: write temp, fsync, rename.
    pub fn store(&self, path: &Path) -> Result<(), CheckpointError> {
        let io_err = |source| CheckpointError::Io {
            path: path.to_path_buf(),
            source,
        };
        let mut body = String::new();
        body.push_str(&format!("{MAGIC}\n"));
        body.push_str(&format!("schema-version: {}\n", self.schema_version));
        body.push_str(&format!("limit: {}\n", self.limit));
        body.push_str(&format!("segment-size: {}\n", self.segment_size));
        body.push_str(&format!(
            "completed-frontier: {}\n",
            self.completed_frontier
        ));
        body.push_str(&format!("running-count: {}\n", self.running_count));
        body.push_str(&format!("truncated: {}\n", self.truncated));
        body.push_str(&format!("records: {}\n", self.nonsolutions.len()));
        for m in &self.nonsolutions {
            body.push_str(&format!("{m}\n"));
        }

        let tmp = path.with_extension("tmp");
        {
            let mut file = fs::File::create(&tmp).map_err(io_err)?;
            file.write_all(body.as_bytes()).map_err(io_err)?;
            file.sync_all().map_err(io_err)?;
        }
        fs::rename(&tmp, path).map_err(io_err)?;
        Ok(())
    }

    /// Loads and strictly validates a checkpoint; any inconsistency is a
    /// refusal, never a silent fallback.
    pub fn load(path: &Path) -> Result<Self, CheckpointError> {
        let io_err = |source| CheckpointError::Io {
            path: path.to_path_buf(),
            source,
        };
        let corrupt = |reason: String| CheckpointError::Corrupt {
            path: path.to_path_buf(),
            reason,
        };

        let file = fs::File::open(path).map_err(io_err)?;
        let mut lines = BufReader::new(file).lines();
        let mut next = |what: &str| -> Result<String, CheckpointError> {
            lines
                .next()
                .transpose()
                .map_err(io_err)?
                .ok_or_else(|| corrupt(format!("missing {what}")))
        };

        if next("magic line")? != MAGIC {
            return Err(corrupt("bad magic line".into()));
        }
        let field = |line: String, key: &str| -> Result<u64, CheckpointError> {
            let prefix = format!("{key}: ");
            line.strip_prefix(&prefix)
                .ok_or_else(|| corrupt(format!("expected `{key}`, got `{line}`")))?
                .parse()
                .map_err(|_| corrupt(format!("unparseable value in `{line}`")))
        };

        let schema_version = field(next("schema-version")?, "schema-version")? as u32;
        if schema_version != CHECKPOINT_SCHEMA_VERSION {
            return Err(CheckpointError::VersionMismatch {
                path: path.to_path_buf(),
                found: schema_version,
                expected: CHECKPOINT_SCHEMA_VERSION,
            });
        }
        let limit = field(next("limit")?, "limit")?;
        let segment_size = field(next("segment-size")?, "segment-size")?;
        let completed_frontier = field(next("completed-frontier")?, "completed-frontier")?;
        let running_count = field(next("running-count")?, "running-count")?;
        let truncated_line = next("truncated")?;
        let truncated = match truncated_line.strip_prefix("truncated: ") {
            Some("true") => true,
            Some("false") => false,
            _ => return Err(corrupt(format!("unparseable `{truncated_line}`"))),
        };
        let records = field(next("records")?, "records")?;

        let mut nonsolutions = Vec::with_capacity(records as usize);
        for _ in 0..records {
            let line = next("non-solution record")?;
            nonsolutions.push(
                line.parse()
                    .map_err(|_| corrupt(format!("bad record `{line}`")))?,
            );
        }
        if lines.next().is_some() {
            return Err(corrupt("trailing data after records".into()));
        }

        let checkpoint = Checkpoint {
            schema_version,
            limit,
            segment_size,
            completed_frontier,
            running_count,
            nonsolutions,
            truncated,
        };
        checkpoint.validate(path)?;
        Ok(checkpoint)
    }
}

/// Options for a checkpointed scan.
#[derive(Debug, Clone)]
pub struct CheckpointedScanOptions {
    /// Worker threads; 0 means the rayon default.
    pub threads: usize,
    /// Retention cap for non-solution records.
    pub nonsolution_cap: usize,
    /// Continue from an existing checkpoint instead of refusing to
    /// overwrite one.
    pub resume: bool,
    /// Stop (with a durable checkpoint) after this many segments; `None`
    /// runs to completion. This is the cooperative form of interruption,
    /// used by budgeted runs and by the crash-safety tests.
    pub segment_budget: Option<u64>,
}

impl Default for CheckpointedScanOptions {
    fn default() -> Self {
        CheckpointedScanOptions {
            threads: 0,
            nonsolution_cap: DEFAULT_NONSOLUTION_CAP,
            resume: false,
            segment_budget: None,
        }
    }
}

/// Result of a checkpointed scan: either the finished summary or the
/// durable state it paused at.
#[derive(Debug)]
pub enum ScanOutcome {
    Complete(ScanSummary),
    Paused(Checkpoint),
}

/// Scans `[1, limit]` segment by segment, persisting a checkpoint after
/// every segment.
///
/// Rerunning after an interruption (with `resume` set) continues from the
/// stored frontier and produces a summary identical to an uninterrupted
/// run. The checkpoint file is removed on completion.
pub fn scan_checkpointed(
    limit: u64,
    segment_size: u64,
    path: &Path,
    table: &SpfTable,
    opts: &CheckpointedScanOptions,
) -> Result<ScanOutcome, ScanError> {
    if limit < 1 || segment_size < 1 || limit > table.limit() {
        return Err(ScanError::BadRange {
            lo: 1,
            hi: limit,
            table_limit: table.limit(),
        });
    }

    let mut state = if path.exists() {
        if !opts.resume {
            return Err(CheckpointError::AlreadyExists {
                path: path.to_path_buf(),
            }
            .into());
        }
        let loaded = Checkpoint::load(path)?;
        for (field, stored, requested) in [
            ("limit", loaded.limit, limit),
            ("segment-size", loaded.segment_size, segment_size),
        ] {
            if stored != requested {
                return Err(CheckpointError::ParameterMismatch {
                    path: path.to_path_buf(),
                    field,
                    stored,
                    requested,
                }
                .into());
            }
        }
        loaded
    } else {
        Checkpoint::fresh(limit, segment_size)
    };

    let started = Instant::now();
    let mut segments_done = 0u64;

    // One pool for the whole run; segments stay sequential so the
    // checkpoint has a single writer.
    let pool = match opts.threads {
        0 => None,
        t => Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| ScanError::ThreadPool(e.to_string()))?,
        ),
    };

    while state.completed_frontier < limit {
        if let Some(budget) = opts.segment_budget {
            if segments_done >= budget {
                return Ok(ScanOutcome::Paused(state));
            }
        }
        let lo = state.completed_frontier + 1;
        let hi = (state.completed_frontier + segment_size).min(limit);

        let blocks = match &pool {
            Some(pool) => pool.install(|| scan_blocks(lo, hi, table))?,
            None => scan_blocks(lo, hi, table)?,
        };
        let mut segment_summary = ScanSummary {
            lo,
            hi,
            solution_count: 0,
            nonsolutions: std::mem::take(&mut state.nonsolutions),
            truncated: state.truncated,
            cap: opts.nonsolution_cap,
            elapsed: std::time::Duration::ZERO,
        };
        for block in blocks {
            merge_block(&mut segment_summary, block, opts.nonsolution_cap);
        }

        state.completed_frontier = hi;
        state.running_count += segment_summary.solution_count;
        state.nonsolutions = segment_summary.nonsolutions;
        state.truncated = segment_summary.truncated;
        state.store(path)?;
        segments_done += 1;
    }

    fs::remove_file(path).map_err(|source| CheckpointError::Io {
        path: path.to_path_buf(),
        source,
    })?;

    Ok(ScanOutcome::Complete(ScanSummary {
        lo: 1,
        hi: limit,
        solution_count: state.running_count,
        nonsolutions: state.nonsolutions,
        truncated: state.truncated,
        cap: opts.nonsolution_cap,
        elapsed: started.elapsed(),
    }))
}
