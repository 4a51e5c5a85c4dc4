//! Subcommand implementations.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use opn_core::arith::{ArithError, Natural, SpfTable};
use opn_core::experiment::{
    cyclotomic_roots, density_table, descartes_params, meyerowitz_product, ExperimentError,
};
use opn_core::identity::{
    all_passed, gcd_profile, spoof_check, verify_all, AbstractTriple, CandidateParams,
    IdentityError, TripleSampler,
};
use opn_core::scan::{
    divides_sigma_square_scan, prime_power_quotient, scan_checkpointed, scan_range, witness,
    CheckpointedScanOptions, ScanError, ScanOptions, ScanOutcome,
};

use crate::cli::{Command, RunConfig};
use crate::emit::{emit, CheckRecord, ProductRecord, ProfileRecord, Record, SummaryRecord};
use crate::exit_code;

/// A dispatch failure carrying enough structure to pick the exit code.
#[derive(Debug)]
pub enum CommandError {
    Arith(ArithError),
    Identity(IdentityError),
    Scan(ScanError),
    Experiment(ExperimentError),
    /// Output file could not be written.
    Output(PathBuf, std::io::Error),
}

impl std::fmt::Display for CommandError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CommandError::Arith(e) => e.fmt(f),
            CommandError::Identity(e) => e.fmt(f),
            CommandError::Scan(e) => e.fmt(f),
            CommandError::Experiment(e) => e.fmt(f),
            CommandError::Output(path, e) => write!(f, "cannot write {}: {e}", path.display()),
        }
    }
}

impl std::error::Error for CommandError {}

/// Overflow and out-of-range failures share exit code 3.
fn arith_code(e: &ArithError) -> i32 {
    match e {
        ArithError::Overflow { .. }
        | ArithError::OutOfRange(_)
        | ArithError::PrimalityRange(_)
        | ArithError::FactorRange(_) => exit_code::OVERFLOW,
        _ => exit_code::VERDICT_FAILURE,
    }
}

fn scan_code(e: &ScanError) -> i32 {
    match e {
        ScanError::Checkpoint(_) => exit_code::CHECKPOINT,
        ScanError::Arith { source, .. } | ScanError::Arithmetic(source) => arith_code(source),
        _ => exit_code::VERDICT_FAILURE,
    }
}

impl CommandError {
    /// Maps the failure onto the documented exit-code contract.
    pub fn exit_code(&self) -> i32 {
        match self {
            CommandError::Output(..) => exit_code::CHECKPOINT,
            CommandError::Arith(e) => arith_code(e),
            CommandError::Identity(IdentityError::Arith(e)) => arith_code(e),
            CommandError::Identity(_) => exit_code::VERDICT_FAILURE,
            CommandError::Scan(e) => scan_code(e),
            CommandError::Experiment(ExperimentError::Scan(e)) => scan_code(e),
            CommandError::Experiment(ExperimentError::Arith(e)) => arith_code(e),
            CommandError::Experiment(_) => exit_code::VERDICT_FAILURE,
        }
    }
}

impl From<ArithError> for CommandError {
    fn from(e: ArithError) -> Self {
        CommandError::Arith(e)
    }
}
impl From<IdentityError> for CommandError {
    fn from(e: IdentityError) -> Self {
        CommandError::Identity(e)
    }
}
impl From<ScanError> for CommandError {
    fn from(e: ScanError) -> Self {
        CommandError::Scan(e)
    }
}
impl From<ExperimentError> for CommandError {
    fn from(e: ExperimentError) -> Self {
        CommandError::Experiment(e)
    }
}

/// Emits records to stdout or the configured output file.
fn write_records<R: Record>(config: &RunConfig, records: &[R]) -> Result<(), CommandError> {
    let render = |out: &mut dyn Write| emit(records, config.format, out);
    match &config.output {
        Some(path) => {
            let mut file =
                fs::File::create(path).map_err(|e| CommandError::Output(path.clone(), e))?;
            render(&mut file).map_err(|e| CommandError::Output(path.clone(), e))?;
            file.flush()
                .map_err(|e| CommandError::Output(path.clone(), e))
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            render(&mut lock).map_err(|e| CommandError::Output(PathBuf::from("<stdout>"), e))
        }
    }
}

/// Runs one resolved command, returning the process exit code.
pub fn dispatch(config: &RunConfig) -> Result<i32, CommandError> {
    match &config.command {
        Command::Scan {
            limit,
            segment_size,
            checkpoint,
            resume,
        } => cmd_scan(
            config,
            *limit,
            *segment_size,
            checkpoint.as_deref(),
            *resume,
        ),
        Command::DensityTable { limit } => cmd_density_table(config, *limit),
        Command::Nonsolutions { limit } => cmd_nonsolutions(config, *limit),
        Command::A232354 { limit } => cmd_a232354(config, *limit),
        Command::Profile { n, i, q, k, random } => cmd_profile(config, *n, *i, *q, *k, *random),
        Command::SpoofCheck {
            n,
            q,
            k,
            quasi,
            strict,
            descartes,
        } => cmd_spoof_check(config, *n, *q, *k, *quasi, *strict, *descartes),
        Command::Roots { p } => cmd_roots(config, *p),
        Command::Meyerowitz { limit, digits } => cmd_meyerowitz(config, *limit, *digits),
        Command::Witness { m } => cmd_witness(config, *m),
    }
}

fn build_table(limit: u64) -> Result<SpfTable, CommandError> {
    // The sieve needs at least 2 even for a scan capped below that.
    Ok(SpfTable::build(limit.max(2))?)
}

fn cmd_scan(
    config: &RunConfig,
    limit: u64,
    segment_size: u64,
    checkpoint: Option<&std::path::Path>,
    resume: bool,
) -> Result<i32, CommandError> {
    let table = build_table(limit)?;
    let summary = match checkpoint {
        Some(path) => {
            let opts = CheckpointedScanOptions {
                threads: config.threads,
                resume,
                ..Default::default()
            };
            match scan_checkpointed(limit, segment_size, path, &table, &opts)? {
                ScanOutcome::Complete(summary) => summary,
                ScanOutcome::Paused(_) => unreachable!("no segment budget configured"),
            }
        }
        None => {
            let opts = ScanOptions {
                threads: config.threads,
                ..Default::default()
            };
            scan_range(1, limit, &table, &opts)?
        }
    };
    eprintln!(
        "scanned [1, {limit}] in {:.3}s",
        summary.elapsed.as_secs_f64()
    );
    write_records(config, &[SummaryRecord::from_summary(&summary)])?;
    Ok(exit_code::SUCCESS)
}

fn cmd_density_table(config: &RunConfig, limit: u64) -> Result<i32, CommandError> {
    let mut limits = Vec::new();
    let mut power = 10u64;
    while power < limit {
        limits.push(power);
        power = power.saturating_mul(10);
    }
    limits.push(limit);
    let table = build_table(limit)?;
    let rows = density_table(&limits, &table, config.threads)?;
    write_records(config, &rows)?;
    Ok(exit_code::SUCCESS)
}

fn cmd_nonsolutions(config: &RunConfig, limit: u64) -> Result<i32, CommandError> {
    let table = build_table(limit)?;
    let opts = ScanOptions {
        threads: config.threads,
        ..Default::default()
    };
    let summary = scan_range(1, limit, &table, &opts)?;
    let records: Vec<_> = summary
        .nonsolutions
        .iter()
        .map(|&m| opn_core::scan::classify(m, &table))
        .collect::<Result<_, _>>()?;
    write_records(config, &records)?;
    Ok(exit_code::SUCCESS)
}

fn cmd_a232354(config: &RunConfig, limit: u64) -> Result<i32, CommandError> {
    let terms = if limit < 2 {
        Vec::new()
    } else {
        let table = build_table(limit)?;
        divides_sigma_square_scan(limit, &table, config.threads)?
    };
    let records: Vec<_> = terms
        .into_iter()
        .map(prime_power_quotient)
        .collect::<Result<_, _>>()?;
    write_records(config, &records)?;
    Ok(exit_code::SUCCESS)
}

fn cmd_profile(
    config: &RunConfig,
    n: Option<Natural>,
    i: Option<Natural>,
    q: Option<Natural>,
    k: Option<u32>,
    random: Option<u64>,
) -> Result<i32, CommandError> {
    let triples: Vec<AbstractTriple> = match random {
        Some(count) => {
            let mut sampler = TripleSampler::new(config.seed);
            (0..count).map(|_| sampler.sample()).collect()
        }
        None => {
            // clap enforces presence when --random is absent.
            let (n, i, q, k) = (n.unwrap(), i.unwrap(), q.unwrap(), k.unwrap());
            vec![AbstractTriple::new(n.get(), i.get(), q.get(), k)?]
        }
    };

    let mut records = Vec::with_capacity(triples.len());
    let mut failures = 0u64;
    for t in &triples {
        let profile = gcd_profile(t)?;
        let verdicts = verify_all(t)?;
        if !all_passed(&verdicts) {
            failures += 1;
            for v in verdicts.iter().filter(|v| !v.passed) {
                eprintln!("FAIL {}: {}", v.name, v.detail);
            }
        }
        records.push(ProfileRecord {
            n: t.n(),
            i: t.index(),
            q: t.q(),
            k: t.k(),
            profile,
        });
    }
    write_records(config, &records)?;
    if failures > 0 {
        eprintln!(
            "{failures} of {} profiles failed verification",
            triples.len()
        );
        return Ok(exit_code::VERDICT_FAILURE);
    }
    Ok(exit_code::SUCCESS)
}

fn cmd_spoof_check(
    config: &RunConfig,
    n: Option<Natural>,
    q: Option<Natural>,
    k: Option<u32>,
    quasi: bool,
    strict: bool,
    descartes: bool,
) -> Result<i32, CommandError> {
    let params = if descartes {
        CandidateParams {
            strict,
            ..descartes_params()
        }
    } else {
        CandidateParams {
            n: n.unwrap().get(),
            q: q.unwrap().get(),
            k: k.unwrap(),
            quasi,
            strict,
        }
    };
    let report = spoof_check(&params)?;
    let records: Vec<CheckRecord> = report.checks.iter().map(CheckRecord).collect();
    write_records(config, &records)?;
    if report.all_passed() {
        Ok(exit_code::SUCCESS)
    } else {
        Ok(exit_code::VERDICT_FAILURE)
    }
}

fn cmd_roots(config: &RunConfig, p: u64) -> Result<i32, CommandError> {
    let roots = cyclotomic_roots(p)?;
    write_records(config, &[roots])?;
    Ok(exit_code::SUCCESS)
}

fn cmd_meyerowitz(config: &RunConfig, limit: u64, digits: usize) -> Result<i32, CommandError> {
    let product = meyerowitz_product(limit)?;
    write_records(config, &[ProductRecord::new(&product, digits)])?;
    Ok(exit_code::SUCCESS)
}

fn cmd_witness(config: &RunConfig, m: u64) -> Result<i32, CommandError> {
    let records = witness(m)?;
    write_records(config, &records)?;
    Ok(exit_code::SUCCESS)
}
