//! Command-line front end: parses arguments, runs the checks and builds a
//! [`Report`].

mod commands;
pub mod report;

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

pub use report::{CheckEntry, Report, Status, SCHEMA_VERSION};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Usage(#[from] clap::Error),
    #[error("{path}:{line}:{column}: {message}")]
    Input {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

impl CliError {
    /// Process exit status for the error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(e) if !e.use_stderr() => 0,
            _ => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "qosc", version, about = "Oscillator Lie bialgebras and their Jordanian quantization")]
pub struct Cli {
    /// Print the JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone, Copy)]
pub struct OrderArg {
    /// Truncation order in z.
    #[arg(long, env = "QOSC_ORDER", default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..=12))]
    pub order: u32,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify the Lie bialgebra structures on an algebra.
    Classify {
        /// Algebra description file.
        #[arg(long, conflicts_with = "preset")]
        algebra: Option<String>,
        /// Built-in algebra.
        #[arg(long, value_parser = ["h4"])]
        preset: Option<String>,
    },
    /// Hopf axioms of the Jordanian deformation.
    VerifyHopf(OrderArg),
    /// Universal R-matrix, Yang-Baxter, intertwining and matrix checks.
    VerifyRmatrix(OrderArg),
    /// RTT relations and the quantum group coproduct.
    VerifyFrt,
    /// First-order agreement with the Sklyanin bracket.
    VerifySklyanin,
    /// One-boson realization and the Casimir value.
    VerifyBoson(OrderArg),
    /// Everything above.
    VerifyAll(OrderArg),
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run_command<I, T>(argv: I) -> Result<(Cli, Report), CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv)?;
    let report = commands::run(&cli.command)?;
    Ok((cli, report))
}

/// Renders a report the way `qosc` prints it.
pub fn render(cli: &Cli, report: &Report) -> String {
    if cli.json {
        report.to_json()
    } else {
        report.to_text()
    }
}
