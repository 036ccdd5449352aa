//! The `sgraph` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error,
//! 3 budget exhausted.

use std::ffi::OsString;
use std::time::Instant;

use clap::Parser;
use thiserror::Error;

pub mod args;
mod commands;
pub mod report;

use args::{Cli, Command};
use report::{digest, Report, Status};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Graph(#[from] signed_graphs::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Graph(signed_graphs::Error::BudgetExhausted { .. }) => 3,
            _ => 2,
        }
    }
}

/// What a finished run prints and returns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Execution {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Output of a command: a report, or raw text (a graph or CSV) for stdout.
pub(crate) enum Output {
    Report(report::Body, Vec<Vec<u8>>),
    Raw(String, Status),
}

/// Parses `args` (including the program name) and runs the command.
pub fn execute<I, T>(args: I) -> Execution
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Execution {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Execution {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let command = std::iter::once("sgraph".to_string())
        .chain(
            args.iter()
                .skip(1)
                .map(|a| a.to_string_lossy().into_owned()),
        )
        .collect::<Vec<_>>()
        .join(" ");
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads.unwrap_or(0))
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            return Execution {
                code: 2,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    };
    let start = Instant::now();
    match pool.install(|| dispatch(&cli)) {
        Ok(Output::Raw(text, status)) => Execution {
            code: status.exit_code(),
            stdout: text,
            stderr: String::new(),
        },
        Ok(Output::Report(body, inputs)) => {
            let report = Report {
                input_digest: digest(&command, &inputs),
                command,
                status: body.status,
                budget: cli.budget,
                elapsed_ms: start.elapsed().as_millis(),
                results: body.results,
                lines: body.lines,
            };
            Execution {
                code: report.status.exit_code(),
                stdout: report.render(cli.json),
                stderr: String::new(),
            }
        }
        Err(e) => Execution {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn dispatch(cli: &Cli) -> Result<Output, CliError> {
    let ctx = commands::Ctx {
        budget: signed_graphs::Budget::nodes(cli.budget),
        seed: cli.seed,
    };
    match &cli.command {
        Command::Gen(a) => commands::gen(&ctx, a),
        Command::Analyze(a) => commands::analyze(&ctx, a),
        Command::Verify(a) => commands::verify(&ctx, &a.suite),
        Command::Search(a) => commands::search(&ctx, a),
        Command::Harness(a) => commands::harness(&ctx, a),
    }
}
