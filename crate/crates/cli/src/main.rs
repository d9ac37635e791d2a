//! `cdforms`: run verification suites, evaluate expressions, and convert
//! definition files.
//!
//! Exit status: 0 when every check passes, 1 when any check fails, 2 on
//! usage, format or lookup errors.

mod config;
mod eval;
mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cdforms::verify::run_suites;
use cdforms::{Error, Result};
use config::Config;

#[derive(Parser)]
#[command(name = "cdforms", version, about = "Exact checks for combinatorial differential forms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites.
    Verify {
        #[arg(long)]
        config: PathBuf,
        /// Run only these suites (repeatable); overrides the config.
        #[arg(long = "suite")]
        suites: Vec<String>,
        #[arg(long)]
        seed: Option<u64>,
        /// Suites run concurrently.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Also write the machine-readable report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Evaluate the `eval` lines of an expression file.
    Eval {
        #[arg(long)]
        expr: PathBuf,
    },
    /// Write a definitions file: the given config, or the defaults.
    Export {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Read and validate a definitions file, printing its canonical form.
    Import {
        #[arg(long)]
        file: PathBuf,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Format(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Format(format!("cannot write {}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Verify { config, suites, seed, jobs, report } => {
            let mut cfg = Config::parse(&read(&config)?)?;
            if !suites.is_empty() {
                cfg.suites = suites;
            }
            if let Some(s) = seed {
                cfg.seed = s;
            }
            let settings = cfg.settings()?;
            let records = run_suites(&cfg.suite_names(), &settings, jobs)?;
            print!("{}", report::human(&records));
            if let Some(path) = report {
                write(&path, &report::machine(&cfg.describe(), &records))?;
            }
            Ok(if report::any_failed(&records) { ExitCode::from(1) } else { ExitCode::SUCCESS })
        }
        Command::Eval { expr } => {
            eval::run(&read(&expr)?, &mut |line| println!("{line}"))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Export { file, config } => {
            let cfg = match config {
                Some(p) => Config::parse(&read(&p)?)?,
                None => Config::default(),
            };
            write(&file, &cfg.render())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Import { file } => {
            let cfg = Config::parse(&read(&file)?)?;
            cfg.settings()?;
            print!("{}", cfg.render());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
