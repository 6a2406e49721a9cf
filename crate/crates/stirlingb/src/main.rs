//! Command-line surface: Stirling triangles, per-object statistics, and
//! the identity-verification suites with machine-readable reports.
//!
//! Exit codes: 0 on success, 1 when a verified identity fails, 2 on
//! usage, parse, or operational errors.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use stirlingb::qpoly::QPoly;
use stirlingb::verify::{run_all, run_identity, VerifyOptions, VerifyReport};
use stirlingb::{perm_stats, rg1, rg2, Error, RgWord2, RgWordB1, SignedPermutation};

/// Triangles larger than this exceed any desk-scale use of the tool.
const MAX_TABLE_N: usize = 64;

#[derive(Parser)]
#[command(name = "stirlingb", version, about = "Exact q-Stirling numbers of type B and their statistics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a Stirling triangle for n = 0..=max-n.
    Table {
        /// S: second kind; s: first kind; ss: shifted first kind.
        #[arg(value_enum)]
        kind: TableKind,
        #[arg(long = "max-n")]
        max_n: usize,
        /// Compute the q,r-variant instead (S and s only).
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Print the statistics of one object as JSON.
    Stat {
        /// perm: window like [-3,2,-1,5,-4]; word1: first-kind word like
        /// (1,1)(-2,1); word2: second-kind word like 1,0,-1,2,-2,2.
        #[arg(value_enum)]
        kind: StatKind,
        text: String,
    },
    /// Verify an identity (or all of them), streaming JSON-line reports.
    Verify {
        /// Identity id, or "all".
        id: String,
        #[arg(long = "max-n")]
        max_n: usize,
        /// Bound of the second parameter; defaults to max-n.
        #[arg(long = "max-m")]
        max_m: Option<usize>,
        /// Worker threads for the B_n sweeps.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// List the known identity ids.
    Identities,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    #[value(name = "S")]
    Second,
    #[value(name = "s")]
    First,
    #[value(name = "ss")]
    Shifted,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum StatKind {
    Perm,
    Word1,
    Word2,
}

#[derive(Serialize)]
struct TableCell<'a> {
    n: usize,
    k: usize,
    poly: &'a QPoly,
}

#[derive(Serialize)]
struct WeightOut {
    weight: u64,
}

enum CliError {
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = io::stdout().lock();
    match run(cli.command, &mut out) {
        Ok(code) => code,
        // A closed pipe (e.g. piping into `head`) is a normal way for the
        // reader to stop early, not a failure.
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(CliError::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> Result<ExitCode, CliError> {
    match command {
        Command::Table { kind, max_n, r, format } => table(kind, max_n, r, format, out),
        Command::Stat { kind, text } => stat(kind, &text, out),
        Command::Verify { id, max_n, max_m, jobs } => verify(&id, max_n, max_m, jobs, out),
        Command::Identities => {
            for id in stirlingb::verify::IDENTITY_IDS {
                writeln!(out, "{id}")?;
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn table(
    kind: TableKind,
    max_n: usize,
    r: Option<usize>,
    format: Format,
    out: &mut impl Write,
) -> Result<ExitCode, CliError> {
    if max_n > MAX_TABLE_N {
        return Err(Error::Domain(format!("table requires max-n <= {MAX_TABLE_N}")).into());
    }
    let rows = match (kind, r) {
        (TableKind::Second, None) => rg2::stirling2_q_table(max_n)?,
        (TableKind::Second, Some(r)) => rg2::stirling2_q_r_table(max_n, r)?,
        (TableKind::First, None) | (TableKind::First, Some(0)) => rg1::stirling_b1_q_table(max_n)?,
        (TableKind::First, Some(r)) => rg1::stirling_b1_q_r_table(max_n, r)?,
        (TableKind::Shifted, None) => rg1::sstirling_b1_q_table(max_n)?,
        (TableKind::Shifted, Some(_)) => {
            return Err(Error::Domain("the shifted triangle has no r-variant".into()).into());
        }
    };
    match format {
        Format::Csv => {
            writeln!(out, "n,k,poly")?;
            for (n, row) in rows.iter().enumerate() {
                for (k, poly) in row.iter().enumerate() {
                    writeln!(out, "{n},{k},{poly}")?;
                }
            }
        }
        Format::Json => {
            for (n, row) in rows.iter().enumerate() {
                for (k, poly) in row.iter().enumerate() {
                    let line = serde_json::to_string(&TableCell { n, k, poly })
                        .map_err(Error::from)?;
                    writeln!(out, "{line}")?;
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn stat(kind: StatKind, text: &str, out: &mut impl Write) -> Result<ExitCode, CliError> {
    let json = match kind {
        StatKind::Perm => {
            let p: SignedPermutation = text.parse()?;
            serde_json::to_string(&perm_stats(&p)).map_err(Error::from)?
        }
        StatKind::Word1 => {
            let w: RgWordB1 = text.parse()?;
            serde_json::to_string(&rg1::first_kind_stats(&w)).map_err(Error::from)?
        }
        StatKind::Word2 => {
            let w: RgWord2 = text.parse()?;
            serde_json::to_string(&WeightOut { weight: w.weight_exponent() })
                .map_err(Error::from)?
        }
    };
    writeln!(out, "{json}")?;
    Ok(ExitCode::SUCCESS)
}

fn verify(
    id: &str,
    max_n: usize,
    max_m: Option<usize>,
    jobs: usize,
    out: &mut impl Write,
) -> Result<ExitCode, CliError> {
    let opts = VerifyOptions { max_n, max_m: max_m.unwrap_or(max_n), jobs };
    let reports: Vec<VerifyReport> =
        if id == "all" { run_all(&opts)? } else { run_identity(id, &opts)? };
    let mut all_pass = true;
    for report in &reports {
        let line = serde_json::to_string(report).map_err(Error::from)?;
        writeln!(out, "{line}")?;
        all_pass &= report.passed();
    }
    Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
