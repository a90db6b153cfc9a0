//! `polite` - exact counts for the polite-seating process.

mod emit;
mod verify;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};

use emit::{SequenceName, TableKind};
use polite_core::oracle::NAIVE_CAP;
use polite_core::schema;

#[derive(Parser)]
#[command(name = "polite", version, about = "Exact counts for the polite-seating process")]
struct Cli {
    /// Write output to PATH instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit "p;value" CSV lines for b or d at a fixed distance.
    Table {
        /// Which table to emit.
        #[arg(value_enum)]
        kind: TableKind,
        /// Distance k >= 1.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        /// Largest seat count p to emit.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        pmax: u64,
    },
    /// Emit an OEIS b-file ("n value" lines) for a sequence.
    Sequence {
        /// One of: an, a166079, a095236, a095240, a095912, a_ext.
        #[arg(value_enum)]
        name: SequenceName,
        /// Largest index to emit (a095240 starts at 2, the rest at 1).
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        nmax: u64,
    },
    /// Print the comparison table of the bounds U and O against a_n.
    Bounds {
        /// Largest row to print.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        nmax: u64,
        /// Decimal places for the ratio columns.
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(0..=50))]
        precision: u32,
    },
    /// Cross-check every closed form against the brute-force engines.
    Verify {
        /// Largest row for the formula-vs-enumeration sweeps.
        #[arg(long = "nmax-formula", default_value_t = verify::DEFAULT_NMAX_FORMULA,
              value_parser = clap::value_parser!(u64).range(1..=64))]
        nmax_formula: u64,
        /// Largest row for the naive cross-check (hard cap 11).
        #[arg(long = "nmax-oracle", default_value_t = verify::DEFAULT_NMAX_ORACLE,
              value_parser = clap::value_parser!(u64).range(1..=NAIVE_CAP))]
        nmax_oracle: u64,
    },
    /// Print the insertion-order tuple over 2^level runs.
    Schema {
        /// Tuple level i >= 1 (the tuple has 2^i entries).
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=schema::MAX_LEVEL as i64))]
        level: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let mut out: Box<dyn Write> = match &cli.out {
        Some(path) => {
            let file = File::create(path)
                .with_context(|| format!("cannot create {}", path.display()))?;
            Box::new(BufWriter::new(file))
        }
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let code = match cli.command {
        Command::Table { kind, k, pmax } => {
            emit::write_table(&mut out, kind, k, pmax)?;
            ExitCode::SUCCESS
        }
        Command::Sequence { name, nmax } => {
            emit::write_sequence(&mut out, name, nmax)?;
            ExitCode::SUCCESS
        }
        Command::Bounds { nmax, precision } => {
            emit::write_bounds_table(&mut out, nmax, precision)?;
            ExitCode::SUCCESS
        }
        Command::Verify { nmax_formula, nmax_oracle } => {
            let report = verify::run(nmax_formula, nmax_oracle);
            writeln!(out, "{report}")?;
            if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                let check = report.first_failure().expect("a failed check exists");
                let why = check.failure.as_deref().unwrap_or("unknown");
                eprintln!("verification failed: {}: {why}", check.name);
                ExitCode::from(1)
            }
        }
        Command::Schema { level } => {
            let tuple = schema::schema_tuple(level)?;
            writeln!(out, "{tuple}")?;
            ExitCode::SUCCESS
        }
    };
    out.flush()?;
    Ok(code)
}
