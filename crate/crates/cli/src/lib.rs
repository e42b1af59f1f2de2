//! Command-line front end for `cupsq`.
//!
//! Data goes to stdout and diagnostics to stderr. Exit statuses: 0 success,
//! 2 unreadable or invalid input, 3 input that does not fit the complex,
//! 4 not a cocycle, 5 summand table mismatch.

pub mod commands;
pub mod error;
pub mod format;
pub mod parallel;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use cupsq::Ring;

pub use error::{CliError, CliResult};

#[derive(Debug, Parser)]
#[command(name = "cupsq", version, about = "Cup-i products and Steenrod squares of simplicial cochains")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for the support-pair enumeration.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: u32,
    /// Read cochain coefficients in this ring instead of the one in the file.
    #[arg(long, global = true, value_enum)]
    pub ring: Option<RingArg>,
    /// Modulus for `--ring Zp`.
    #[arg(long, global = true)]
    pub modulus: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RingArg {
    #[value(name = "Z")]
    Z,
    #[value(name = "Z2")]
    Z2,
    #[value(name = "Zp")]
    Zp,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cup-n product of two cochains.
    Cup {
        complex: PathBuf,
        c: PathBuf,
        cprime: PathBuf,
        n: usize,
    },
    /// Steenrod square Sq^i of a mod-2 cocycle.
    Sq {
        complex: PathBuf,
        c: PathBuf,
        i: usize,
        /// Also report whether the result is a coboundary.
        #[arg(long)]
        check_class: bool,
    },
    /// Summand counts of c_p ⌣_n c_q, full and bounded enumeration.
    Count { p: usize, q: usize, n: usize },
    /// Recompute the eight reference summand counts.
    Bench,
    /// Whether a cochain is a cocycle (and, mod 2, a coboundary).
    Verify {
        complex: PathBuf,
        c: PathBuf,
        /// Also decide coboundary membership (Z_2 only).
        #[arg(long)]
        class: bool,
    },
}

impl Cli {
    pub fn ring_override(&self) -> CliResult<Option<Ring>> {
        match (self.ring, self.modulus) {
            (None, None) => Ok(None),
            (None, Some(_)) => Err(CliError::Invalid("--modulus needs --ring Zp".into())),
            (Some(RingArg::Z), None) => Ok(Some(Ring::Integers)),
            (Some(RingArg::Z2), None) => Ok(Some(Ring::Z2)),
            (Some(RingArg::Zp), Some(m)) => Ok(Some(Ring::integers_mod(m)?)),
            (Some(RingArg::Zp), None) => Err(CliError::Invalid("--ring Zp needs --modulus".into())),
            (Some(_), Some(_)) => Err(CliError::Invalid("--modulus only applies to --ring Zp".into())),
        }
    }
}

/// Runs a parsed command line, writing data to `out` and diagnostics to
/// `err`. Returns the exit status.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match commands::dispatch(cli, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
