//! Library side of the `kaplansky` command-line tool.
//!
//! [`run`] parses arguments, runs one subcommand, writes the JSON report (or
//! the compiled sentence, for `compile`) to `out` and a short human-readable
//! summary to `err`, and returns the process exit code.

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;

pub mod args;
mod commands;
pub mod error;
pub mod formats;
pub mod parallel;
pub mod report;

use args::{Cli, Command};
use commands::Context;
use error::{CliError, EXIT_NONE, EXIT_PARSE};
use report::{BudgetUsage, ErrorReport, RunReport};

pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_NONE,
                _ => EXIT_PARSE,
            };
            let rendered = e.render().to_string();
            if code == EXIT_NONE {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    let echo = argv
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join(" ");
    let ctx = Context {
        budget: cli.budget,
        jobs: cli.jobs.map_or_else(parallel::default_jobs, |j| j as usize),
    };
    let started = Instant::now();
    let (name, outcome) = match &cli.command {
        Command::Probe(a) => ("probe", commands::probe(a, &ctx)),
        Command::Compile(a) => ("compile", commands::compile(a, &ctx)),
        Command::ScanFields(a) => ("scan-fields", commands::scan_fields(a, &ctx)),
        Command::Lca(a) => ("lca", commands::lca(a, &ctx)),
        Command::Search(a) => ("search", commands::search(a, &ctx)),
        Command::Crosscheck(a) => ("crosscheck", commands::crosscheck(a, &ctx)),
    };
    let elapsed_ms = started.elapsed().as_secs_f64() * 1e3;
    let mut report = RunReport {
        tool: "kaplansky",
        version: env!("CARGO_PKG_VERSION"),
        command: echo,
        subcommand: name,
        parameters: serde_json::Value::Null,
        budget: BudgetUsage {
            limit: cli.budget,
            used: None,
        },
        result: None,
        error: None,
        exit_code: EXIT_NONE,
        elapsed_ms,
    };
    match outcome {
        Ok(o) => {
            let _ = writeln!(err, "{}", o.summary);
            if let Some(raw) = o.raw_output {
                let _ = write!(out, "{raw}");
                return o.exit_code;
            }
            report.parameters = o.parameters;
            report.budget.used = o.used;
            report.result = Some(o.result);
            report.exit_code = o.exit_code;
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if name == "compile" {
                return e.exit_code();
            }
            report.error = Some(error_report(&e));
            report.exit_code = e.exit_code();
        }
    }
    let _ = writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(&report).expect("reports serialize")
    );
    report.exit_code
}

fn error_report(e: &CliError) -> ErrorReport {
    let required = match e {
        CliError::Core(kaplansky_core::Error::BudgetExceeded { required, .. }) => *required,
        _ => None,
    };
    ErrorReport {
        kind: e.kind(),
        message: e.to_string(),
        required,
    }
}
