//! Implementation of the `opn` command line tool.
//!
//! The binary in `main.rs` is a thin shim over [`run`], which parses the
//! arguments, dispatches to the library, and maps failures onto the exit
//! code contract:
//!
//! | code | meaning |
//! |------|---------|
//! | 0    | success |
//! | 1    | a verification or verdict failure (including "no roots") |
//! | 2    | usage error |
//! | 3    | arithmetic overflow or out-of-range value |
//! | 4    | checkpoint or output-file error |
//!
//! All result records go to stdout (or `--output`); progress and
//! diagnostics go to stderr so record streams stay byte-stable.

pub mod cli;
pub mod commands;
pub mod emit;

use std::ffi::OsString;

use clap::Parser;

pub use cli::{Cli, RunConfig};

/// Exit codes of the `opn` binary.
pub mod exit_code {
    pub const SUCCESS: i32 = 0;
    pub const VERDICT_FAILURE: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const OVERFLOW: i32 = 3;
    pub const CHECKPOINT: i32 = 4;
}

/// Parses `argv` and runs the requested subcommand, returning the process
/// exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            // clap renders help/version on stdout with success; true usage
            // errors land on stderr with code 2.
            let _ = err.print();
            return if err.exit_code() == 0 {
                exit_code::SUCCESS
            } else {
                exit_code::USAGE
            };
        }
    };

    let config = match RunConfig::from_cli(cli) {
        Ok(config) => config,
        Err(message) => {
            eprintln!("error: {message}");
            return exit_code::USAGE;
        }
    };

    match commands::dispatch(&config) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}
