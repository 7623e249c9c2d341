mod args;
mod commands;
mod output;

use std::fs;
use std::process::ExitCode;

use clap::Parser;
use thiserror::Error;

use args::{Cli, Format};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] froeberg_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(froeberg_core::Error::Parse { .. }) => 2,
            CliError::Core(_) => 1,
            CliError::Usage(_) | CliError::Io(_) => 2,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let rendered = match commands::run(&cli.command, cli.seed) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&rendered.json).expect("json") + "\n",
        Format::Tsv => rendered.tsv,
        Format::Pretty => rendered.pretty,
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if rendered.failed {
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    }
}
