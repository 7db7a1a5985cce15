//! Verification harness: case grids over the three operator families, a
//! parallel runner and JSON/CSV reports.
//!
//! Exit status is 0 when every case passes, 1 when any case fails and 2 on a
//! configuration error.

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

pub mod cases;
pub mod config;
pub mod export;
pub mod report;
pub mod runner;

use config::{Config, Family, Format, GridArgs, Suite};
use export::Table;
use report::Report;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("cannot write {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "ltype", version, about = "Exact verification of Laguerre-, Jacobi- and Bessel-type operator identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run verification suites and write a report.
    Verify {
        #[arg(value_enum)]
        target: Target,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Export exact coefficient tables.
    Export {
        #[arg(value_enum)]
        what: ExportWhat,
        #[command(flatten)]
        args: ExportArgs,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Target {
    Equiv,
    Eigen,
    Symmetry,
    Gram,
    Identities,
    All,
}

impl Target {
    fn suites(self) -> Vec<Suite> {
        match self {
            Target::Equiv => vec![Suite::Equiv],
            Target::Eigen => vec![Suite::Eigen],
            Target::Symmetry => vec![Suite::Symmetry],
            Target::Gram => vec![Suite::Gram],
            Target::Identities => vec![Suite::Identities],
            Target::All => Suite::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ExportWhat {
    Coeffs,
}

#[derive(Debug, Clone, clap::Args)]
struct ExportArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long, default_value_t = 0)]
    alpha: u32,
    /// Jacobi beta as "p" or "p/q".
    #[arg(long, value_parser = config::parse_rational_arg, allow_hyphen_values = true)]
    beta: Option<ltype::Rational>,
    /// Which table; defaults to the family's main table.
    #[arg(long, value_enum)]
    table: Option<Table>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

/// Generates and runs every case selected by `config`.
pub fn verify(config: &Config) -> Report {
    let start = Instant::now();
    let cases = cases::generate(config);
    let evaluated = runner::run_cases(config, cases);
    let total = config.timing.then(|| start.elapsed().as_micros() as u64);
    Report::build(config, evaluated, total)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|source| CliError::Io { path: "<stdout>".into(), source })
        }
    }
}

fn dispatch(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Verify { target, grid } => {
            let config = Config::new(target.suites(), grid)?;
            let report = verify(&config);
            let text = match config.format {
                Format::Json => report.to_json(),
                Format::Csv => report.to_csv(),
            };
            emit(config.out.as_deref(), &text)?;
            eprintln!(
                "{} cases: {} pass, {} fail",
                report.cases.len(),
                report.summary.pass,
                report.summary.fail
            );
            Ok(if report.all_pass() { EXIT_PASS } else { EXIT_FAIL })
        }
        Command::Export { what: ExportWhat::Coeffs, args } => {
            let doc = export::coefficient_table(args.family, args.table, args.alpha, args.beta.as_ref())?;
            emit(args.out.as_deref(), &doc.render(args.format))?;
            Ok(EXIT_PASS)
        }
    }
}

/// Parses arguments, runs the command and returns the process exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { EXIT_PASS };
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("ltype: {e}");
            EXIT_CONFIG
        }
    }
}
