//! `polyring-lab`: command-line front end for the polyring toolkit.
//!
//! Exit codes: 0 success or witness found, 1 nothing found within the
//! budget or a failed recheck, 2 invalid input, 3 internal invariant
//! violation.

mod commands;
mod inputs;
mod output;

use std::io::Write;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use output::{Format, Table};

#[derive(Debug)]
pub enum CliError {
    Invalid(String),
    Internal(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Invalid(m) => write!(f, "invalid input: {m}"),
            CliError::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

macro_rules! invalid_from {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Invalid(e.to_string())
            }
        }
    )*};
}

invalid_from!(
    polyring_core::algebras::AlgebraError,
    polyring_core::algebras::EvalError,
    polyring_core::terms::TermError
);

impl From<polyring_core::zariski::ZariskiError> for CliError {
    fn from(e: polyring_core::zariski::ZariskiError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<polyring_core::ramsey::RamseyError> for CliError {
    fn from(e: polyring_core::ramsey::RamseyError) -> Self {
        use polyring_core::ramsey::RamseyError;
        match e {
            RamseyError::Counterexample { .. } => CliError::Internal(e.to_string()),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

/// What a command produced.
pub struct Outcome {
    pub value: Value,
    /// false when nothing was found or a recheck failed
    pub found: bool,
    pub table: Option<Table>,
}

impl Outcome {
    pub fn found(value: Value) -> Self {
        Outcome {
            value,
            found: true,
            table: None,
        }
    }

    pub fn with(value: Value, found: bool) -> Self {
        Outcome {
            value,
            found,
            table: None,
        }
    }

    pub fn table(mut self, t: Table) -> Self {
        self.table = Some(t);
        self
    }
}

#[derive(Debug, Parser)]
#[command(name = "polyring-lab", version, about = "Terms, polyrings, Zariski spaces and finite-sums Ramsey searches")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Global {
    /// seed for every randomized step
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// node limit for backtracking searches
    #[arg(long, global = true)]
    pub budget_nodes: Option<u64>,
    /// wall-clock limit; the run aborts with exit code 1 when it is reached
    #[arg(long, global = true)]
    pub budget_seconds: Option<f64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// write the report here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Term normalization, degrees and decompositions
    #[command(subcommand)]
    Term(commands::TermCmd),
    /// Finite polyring instances
    #[command(subcommand)]
    Alg(commands::AlgCmd),
    /// Zariski spaces, the Cantor example and certificates
    #[command(subcommand)]
    Zariski(commands::ZariskiCmd),
    /// Finite sums, finite products and partition searches
    #[command(subcommand)]
    Ramsey(commands::RamseyCmd),
    /// Idempotents, ideals and cancellativity of finite semigroups
    #[command(subcommand)]
    Sgrp(commands::SgrpCmd),
}

fn configure_threads() -> Result<(), CliError> {
    if let Ok(v) = std::env::var("POLYRING_LAB_THREADS") {
        let n: usize = v
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| CliError::Invalid(format!("POLYRING_LAB_THREADS must be a positive integer, got `{v}`")))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Internal(e.to_string()))?;
    }
    Ok(())
}

/// Arguments that reproduce this run, without the output path.
fn replay_args() -> Vec<String> {
    let mut out = Vec::new();
    let mut args = std::env::args().skip(1);
    while let Some(a) = args.next() {
        if a == "--out" {
            args.next();
        } else if !a.starts_with("--out=") {
            out.push(a);
        }
    }
    out
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    configure_threads()?;
    if let Some(secs) = cli.global.budget_seconds {
        if !(secs.is_finite() && secs >= 0.0) {
            return Err(CliError::Invalid("--budget-seconds must be non-negative".into()));
        }
        let limit = Duration::from_secs_f64(secs);
        std::thread::spawn(move || {
            std::thread::sleep(limit);
            eprintln!("time budget of {secs} s exhausted");
            std::process::exit(1);
        });
    }
    let mut outcome = commands::dispatch(&cli.command, &cli.global)?;
    if let Value::Object(map) = &mut outcome.value {
        map.insert("replay".into(), Value::from(replay_args()));
    }
    let text = output::render(&outcome.value, outcome.table.as_ref(), cli.global.format)?;
    match &cli.global.out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))?,
        None => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not an error of the computation
            let _ = stdout.write_all(text.as_bytes());
        }
    }
    Ok(if outcome.found { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("polyring-lab: {e}");
            ExitCode::from(match e {
                CliError::Invalid(_) => 2,
                CliError::Internal(_) => 3,
            })
        }
    }
}
