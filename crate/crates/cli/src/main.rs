use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use serde_json::Value;

use tdpair::enumerate::{enumerate, DEFAULT_GRID_LIMIT};
use tdpair::io::{self, ReportStatus};
use tdpair::shape121::{admissible, construct};

const EXIT_IO: u8 = 1;
const EXIT_INADMISSIBLE: u8 = 2;
const EXIT_VERIFICATION: u8 = 3;

#[derive(Parser)]
#[command(name = "tdpair", version, about = "Construct, verify and analyze tridiagonal pairs of shape (1,2,1)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Derived parameters, admissibility, verification and formula cross-checks for a parameter array.
    Report {
        file: PathBuf,
        /// Also include the six bases and every transition and representation matrix.
        #[arg(long)]
        full: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the TD axioms for a pair of 4x4 matrices.
    Verify { file: PathBuf },
    /// Build the canonical TD system of an admissible parameter array.
    Construct {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Count admissible parameter arrays over GF(p).
    Enumerate {
        #[arg(long)]
        p: u64,
        /// Also count D4 orbits among the admissible arrays.
        #[arg(long)]
        orbits: bool,
        /// Ignore the grid size limit.
        #[arg(long)]
        force: bool,
    },
}

/// A failure that maps to a specific exit code.
struct Exit(u8, anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for Exit {
    fn from(e: E) -> Self {
        Exit(EXIT_IO, e.into())
    }
}

fn read_json(path: &Path) -> Result<Value> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(doc: &Value, out: Option<&Path>) -> Result<()> {
    let text = io::to_pretty(doc);
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn grid_limit() -> Result<u128> {
    match std::env::var("TDP_MAX_GRID") {
        Ok(s) => s.trim().parse().with_context(|| format!("TDP_MAX_GRID={s:?} is not a number")),
        Err(_) => Ok(DEFAULT_GRID_LIMIT),
    }
}

fn run(command: Command) -> std::result::Result<(), Exit> {
    match command {
        Command::Report { file, full, out } => {
            let pa = io::parameter_array_from_json(&read_json(&file)?)?;
            let report = io::report(&pa, full).map_err(|e| Exit(EXIT_VERIFICATION, e.into()))?;
            emit(&report.document, out.as_deref())?;
            match report.status {
                ReportStatus::Ok => Ok(()),
                ReportStatus::Inadmissible(failed) => {
                    Err(Exit(EXIT_INADMISSIBLE, anyhow::anyhow!("not admissible: fails {}", failed.join(", "))))
                }
                ReportStatus::CheckFailed => Err(Exit(EXIT_VERIFICATION, anyhow::anyhow!("cross-check failed"))),
            }
        }
        Command::Verify { file } => {
            let input = io::system_from_json(&read_json(&file)?)?;
            let outcome = io::verify_document(&input).map_err(|e| Exit(EXIT_VERIFICATION, e.into()))?;
            emit(&outcome.document, None)?;
            if outcome.certified {
                Ok(())
            } else {
                Err(Exit(EXIT_VERIFICATION, anyhow::anyhow!("not a TD system of shape (1,2,1)")))
            }
        }
        Command::Construct { file, out } => {
            let pa = io::parameter_array_from_json(&read_json(&file)?)?;
            let adm = admissible(&pa);
            if !adm.ok {
                emit(&io::admissibility_to_json(&adm), None)?;
                return Err(Exit(EXIT_INADMISSIBLE, anyhow::anyhow!("not admissible: fails {}", adm.failed.join(", "))));
            }
            let tds = construct(&pa).map_err(|e| Exit(EXIT_VERIFICATION, e.into()))?;
            emit(&io::system_to_json(&tds), Some(&out))?;
            Ok(())
        }
        Command::Enumerate { p, orbits, force } => {
            let limit = if force { u128::MAX } else { grid_limit()? };
            let summary = enumerate(p, orbits, limit)?;
            emit(&io::enumeration_to_json(&summary), None)?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Exit(code, err)) => {
            eprintln!("tdpair: {err:#}");
            ExitCode::from(code)
        }
    }
}
