//! phasectl: deterministic CSV front end for the two-pathway phase-control
//! library.
//!
//! Exit codes: 0 success, 2 usage error (bad flags, bad config), 1 runtime
//! or numeric error (I/O, singular input data, integration failure).

use std::process::ExitCode;

use clap::Parser;

mod cmds;
mod config;
mod csvfmt;
mod opts;

/// Errors split by exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Runtime(String),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn runtime(msg: impl Into<String>) -> Self {
        CliError::Runtime(msg.into())
    }
}

impl From<phasectl::Error> for CliError {
    fn from(e: phasectl::Error) -> Self {
        CliError::Runtime(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Runtime(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;

fn main() -> ExitCode {
    // clap itself exits with code 2 on usage errors and 0 for help/version.
    let cli = opts::Cli::parse();
    let result = match cli.cmd {
        opts::Cmd::Evolve(args) => cmds::evolve::run(args),
        opts::Cmd::Profile(args) => cmds::profile::run(args),
        opts::Cmd::Sweep(args) => cmds::sweep::run(args),
        opts::Cmd::Mu3(args) => cmds::mu3::run(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
