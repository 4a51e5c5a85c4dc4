//! Argument parsing and the resolved run configuration.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use opn_core::arith::Natural;
use opn_core::identity::TripleSampler;

/// Environment variable consulted for the worker count when `--threads`
/// is not given.
pub const THREADS_ENV: &str = "OPN_THREADS";

/// Default segment size for checkpointed scans.
pub const DEFAULT_SEGMENT_SIZE: u64 = 1_048_576;

#[derive(Debug, Parser)]
#[command(
    name = "opn",
    about = "Divisor-sum GCD invariants and solution-density scans",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format for result records.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Write records to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,

    /// Worker threads (overrides the OPN_THREADS environment variable;
    /// defaults to the number of available cores).
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,

    /// Seed for randomized operations.
    #[arg(long, global = true, default_value_t = TripleSampler::DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify every m up to the limit and report the summary.
    Scan {
        /// Scan upper bound (inclusive).
        #[arg(long)]
        limit: u64,

        /// Values of m per checkpointed segment.
        #[arg(long, value_name = "N", default_value_t = DEFAULT_SEGMENT_SIZE)]
        segment_size: u64,

        /// Persist resumable state to this file after every segment.
        #[arg(long, value_name = "PATH")]
        checkpoint: Option<PathBuf>,

        /// Continue from an existing checkpoint.
        #[arg(long, requires = "checkpoint")]
        resume: bool,
    },

    /// Reproduce the solution-density table at powers of ten.
    DensityTable {
        /// Largest limit (rows appear at every power of ten up to it).
        #[arg(long)]
        limit: u64,
    },

    /// List every non-solution m up to the limit.
    Nonsolutions {
        #[arg(long)]
        limit: u64,
    },

    /// Search for w with w | sigma(w^2) (OEIS A232354).
    #[command(name = "a232354")]
    A232354 {
        #[arg(long)]
        limit: u64,
    },

    /// Compute the GCD profile (E, F, K, G, H, I, J) for abstract
    /// Eulerian data, verifying every identity along the way.
    Profile {
        /// Odd n.
        #[arg(long, required_unless_present = "random", conflicts_with = "random")]
        n: Option<Natural>,

        /// Odd index i dividing n^2.
        #[arg(long, required_unless_present = "random", conflicts_with = "random")]
        i: Option<Natural>,

        /// Special factor q >= 3 coprime to 2n^2.
        #[arg(long, required_unless_present = "random", conflicts_with = "random")]
        q: Option<Natural>,

        /// Exponent k >= 1.
        #[arg(long, required_unless_present = "random", conflicts_with = "random")]
        k: Option<u32>,

        /// Verify this many seeded random triples instead of one explicit
        /// input.
        #[arg(long, value_name = "COUNT")]
        random: Option<u64>,
    },

    /// Check the perfection equation (and, with --strict, the Eulerian
    /// side conditions) for a candidate q^k * n^2.
    SpoofCheck {
        #[arg(
            long,
            required_unless_present = "descartes",
            conflicts_with = "descartes"
        )]
        n: Option<Natural>,

        #[arg(
            long,
            required_unless_present = "descartes",
            conflicts_with = "descartes"
        )]
        q: Option<Natural>,

        #[arg(
            long,
            required_unless_present = "descartes",
            conflicts_with = "descartes"
        )]
        k: Option<u32>,

        /// Evaluate sigma(q^k) as a geometric series even if q is composite.
        #[arg(long)]
        quasi: bool,

        /// Additionally require q prime and q = k = 1 (mod 4).
        #[arg(long)]
        strict: bool,

        /// Use the built-in Descartes spoof (implies --quasi).
        #[arg(long)]
        descartes: bool,
    },

    /// Solve u^2 + u + 1 = 0 (mod p) for a prime p.
    Roots {
        #[arg(long)]
        p: u64,
    },

    /// Partial product of (1 - (p-1)/p^2) over primes p = 1 (mod 6).
    Meyerowitz {
        #[arg(long)]
        limit: u64,

        /// Decimal digits to report (every digit printed is exact).
        #[arg(long, default_value_t = 15)]
        digits: usize,
    },

    /// Explain per prime why m fails (or satisfies) the gcd equation.
    Witness {
        #[arg(long)]
        m: u64,
    },
}

/// Fully resolved configuration: flags beat environment, environment
/// beats defaults.
#[derive(Debug)]
pub struct RunConfig {
    pub command: Command,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub threads: usize,
    pub seed: u64,
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, String> {
        let threads = match cli.threads {
            Some(0) => return Err("--threads must be at least 1".into()),
            Some(t) => t,
            None => match std::env::var(THREADS_ENV) {
                Ok(raw) => match raw.trim().parse::<usize>() {
                    Ok(0) | Err(_) => {
                        return Err(format!(
                            "{THREADS_ENV} must be a positive integer, got `{raw}`"
                        ))
                    }
                    Ok(t) => t,
                },
                Err(_) => std::thread::available_parallelism().map_or(1, |n| n.get()),
            },
        };

        if let Some(limit) = match &cli.command {
            Command::Scan { limit, .. }
            | Command::DensityTable { limit }
            | Command::Nonsolutions { limit }
            | Command::A232354 { limit }
            | Command::Meyerowitz { limit, .. } => Some(*limit),
            _ => None,
        } {
            if limit < 1 {
                return Err("--limit must be at least 1".into());
            }
        }
        if let Command::Scan { segment_size, .. } = &cli.command {
            if *segment_size < 1 {
                return Err("--segment-size must be at least 1".into());
            }
        }

        Ok(RunConfig {
            command: cli.command,
            format: cli.format,
            output: cli.output,
            threads,
            seed: cli.seed,
        })
    }
}
