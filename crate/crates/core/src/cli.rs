//! Command-line front end.
//!
//! Exit codes: 0 when every check passed, 1 when some mathematical check
//! failed, 2 for usage, budget and I/O errors.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::engine::{with_threads, Budgets, Engine, Execution, VerificationReport};
use crate::error::{Error, Result};
use crate::partition::{parse_partition, Partition};
use crate::report::{self, ComputeJson, Format, OracleJson, ReportJson, SweepJson};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "cyclepoly", version, about = "Cycle-count polynomials over n-cycles, verified exactly")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Worker threads for the histogram pass (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub threads: Option<u64>,

    /// Max (n-1)! for the n-cycle pass.
    #[arg(long = "enum-budget", global = true, default_value_t = Budgets::default().enumeration)]
    pub enum_budget: u64,

    /// Max class size n!/z for the direct class-sum oracle.
    #[arg(long = "oracle-budget", global = true, default_value_t = Budgets::default().class_sum)]
    pub oracle_budget: u64,

    /// Max n! for the conjugation oracle over all of S_n.
    #[arg(long = "conjugation-budget", global = true, default_value_t = Budgets::default().conjugation)]
    pub conjugation_budget: u64,

    /// Include per-phase wall-clock timings (makes output non-deterministic).
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Compute F and P for one partition.
    Compute {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
    },
    /// Verify every claim for one partition.
    Verify {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        /// Also cross-check P against the brute-force oracles.
        #[arg(long)]
        oracle: bool,
    },
    /// Verify every partition of every n up to a bound.
    Sweep {
        #[arg(long = "max-n", value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
        #[arg(long)]
        oracle: bool,
    },
    /// Compute P three ways and compare.
    Oracle {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
    },
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub threads: Option<usize>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub budgets: Budgets,
    pub timings: bool,
}

impl From<Cli> for RunConfig {
    fn from(cli: Cli) -> Self {
        RunConfig {
            command: cli.command,
            threads: cli.threads.map(|t| t as usize),
            format: cli.format,
            out: cli.out,
            budgets: Budgets {
                enumeration: cli.enum_budget,
                class_sum: cli.oracle_budget,
                conjugation: cli.conjugation_budget,
            },
            timings: cli.timings,
        }
    }
}

/// Rendered output plus the exit status it implies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rendered {
    pub text: String,
    pub status: i32,
    /// One-line note for stderr (e.g. skipped partitions).
    pub note: Option<String>,
}

/// 1 iff some report has a failed check.
pub fn exit_status(reports: &[VerificationReport]) -> i32 {
    if reports.iter().all(VerificationReport::all_checks_pass) {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

fn render_reports(reports: &[ReportJson], format: Format) -> Result<String> {
    match format {
        Format::Json if reports.len() == 1 => report::to_json(&reports[0]),
        Format::Json => report::to_json(&reports),
        Format::Csv => report::reports_to_csv(reports),
        Format::Text => Ok(reports.iter().map(report::report_to_text).collect()),
    }
}

/// Renders one report in the chosen format.
pub fn render_report(r: &VerificationReport, format: Format, with_timings: bool) -> Result<String> {
    render_reports(&[ReportJson::new(r, with_timings)], format)
}

/// Executes the command without touching stdout.
pub fn execute(config: &RunConfig) -> Result<Rendered> {
    let engine = Engine::new(config.budgets, Execution::Parallel);
    with_threads(config.threads, || execute_with(&engine, config))
}

fn execute_with(engine: &Engine, config: &RunConfig) -> Result<Rendered> {
    let format = config.format;
    match &config.command {
        Command::Compute { lambda } => {
            let h = engine.histogram(lambda)?;
            let f = crate::engine::f_from_histogram(&h);
            let p = crate::engine::p_from_histogram(&h)?;
            let c = ComputeJson::new(&h, &f, &p);
            let text = match format {
                Format::Json => report::to_json(&c)?,
                Format::Csv => report::compute_to_csv(&c)?,
                Format::Text => report::compute_to_text(&c),
            };
            Ok(Rendered {
                text,
                status: EXIT_OK,
                note: None,
            })
        }
        Command::Verify { lambda, oracle } => {
            let r = engine.verify_conjecture(lambda, *oracle)?;
            Ok(Rendered {
                text: render_report(&r, format, config.timings)?,
                status: exit_status(std::slice::from_ref(&r)),
                note: None,
            })
        }
        Command::Sweep { max_n, oracle } => {
            let max_n = *max_n as usize;
            let outcome = engine.sweep(max_n, *oracle)?.run()?;
            let json = SweepJson::new(&outcome, max_n, *oracle, config.timings);
            let text = match format {
                Format::Json => report::to_json(&json)?,
                Format::Csv => report::reports_to_csv(&json.reports)?,
                Format::Text => report::sweep_to_text(&json),
            };
            let mut status = exit_status(&outcome.reports);
            let mut note = None;
            if !outcome.skipped.is_empty() {
                note = Some(format!(
                    "{} partition(s) skipped on budget limits; first: ({}) {}",
                    outcome.skipped.len(),
                    outcome.skipped[0].lambda,
                    outcome.skipped[0].reason
                ));
                if status == EXIT_OK {
                    status = EXIT_ERROR;
                }
            }
            Ok(Rendered { text, status, note })
        }
        Command::Oracle { lambda } => {
            let p = crate::engine::p_from_histogram(&engine.histogram(lambda)?)?;
            let class_sum = engine.p_direct_class_sum(lambda)?;
            let conjugation = match engine.p_conjugation_oracle(lambda) {
                Ok(c) => Some(c),
                Err(Error::BudgetExceeded { .. }) => None,
                Err(e) => return Err(e),
            };
            let o = OracleJson::new(lambda, &p, Some(&class_sum), conjugation.as_ref());
            let status = if o.agree { EXIT_OK } else { EXIT_CHECK_FAILED };
            let text = match format {
                Format::Json => report::to_json(&o)?,
                Format::Csv => report::oracle_to_csv(&o)?,
                Format::Text => report::oracle_to_text(&o),
            };
            Ok(Rendered {
                text,
                status,
                note: None,
            })
        }
    }
}

fn write_output(config: &RunConfig, text: &str) -> Result<()> {
    match &config.out {
        Some(path) => std::fs::write(path, text)?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
        }
    }
    Ok(())
}

/// Runs a parsed configuration; returns the process exit code.
pub fn run(config: RunConfig) -> i32 {
    let rendered = match execute(&config) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_ERROR;
        }
    };
    if let Err(e) = write_output(&config, &rendered.text) {
        eprintln!("error: {e}");
        return EXIT_ERROR;
    }
    if let Some(note) = rendered.note {
        eprintln!("warning: {note}");
    }
    rendered.status
}

/// Parses `args` (including the program name) and runs.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli.into()),
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            if code == 0 {
                EXIT_OK
            } else {
                EXIT_ERROR
            }
        }
    }
}
