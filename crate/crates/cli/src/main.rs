mod cli;
mod commands;
mod report;

use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::Parser;
use cli::Cli;
use commands::Output;

/// Failure classes, each with its own exit code.
#[derive(Debug)]
pub enum CliError {
    Io(String),
    Core(coordcut::Error),
}

impl From<coordcut::Error> for CliError {
    fn from(e: coordcut::Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        use coordcut::Error::*;
        match self {
            CliError::Core(Parse { .. } | InvalidInput(_) | DimensionMismatch { .. }) => 2,
            CliError::Core(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(msg) => write!(f, "I/O error: {msg}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

fn read_input(cli: &Cli) -> Result<String, CliError> {
    match &cli.common.input {
        Some(path) => fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(|e| CliError::Io(format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn write_output(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.common.output {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => io::stdout().write_all(text.as_bytes()).map_err(|e| CliError::Io(format!("stdout: {e}"))),
    }
}

fn execute(cli: &Cli) -> Result<(), CliError> {
    let command = cli.command.as_ref().expect("checked by main");
    let input = read_input(cli)?;
    let work = || commands::run(command, &cli.common, &input);
    let output = match cli.common.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| CliError::Io(format!("thread pool: {e}")))?
            .install(work),
        None => work(),
    }?;
    let text = match output {
        Output::Raw(text) => text,
        Output::Report(report) => report.render(cli.common.format).ok_or_else(|| {
            let msg = format!("`{}` has no graph to draw; use --format json or text", command.name());
            CliError::Core(coordcut::Error::InvalidInput(msg))
        })?,
    };
    write_output(cli, &text)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.version {
        println!(
            "coordcut {} (library {}, format {})",
            env!("CARGO_PKG_VERSION"),
            coordcut::VERSION,
            coordcut::FORMAT_VERSION
        );
        return ExitCode::SUCCESS;
    }
    if cli.command.is_none() {
        eprintln!("error: a subcommand is required (see --help)");
        return ExitCode::from(2);
    }
    match execute(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
