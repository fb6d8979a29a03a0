//! `hahn`: evaluate, tabulate and verify Hahn polynomials.

mod args;
mod commands;
mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};

fn usage_exit(msg: &str) -> ExitCode {
    let line = msg.lines().next().unwrap_or("usage error");
    let line = line.strip_prefix("error: ").unwrap_or(line);
    eprintln!("error: {line}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => return usage_exit(&e.to_string()),
    };
    let (result, out) = match &cli.command {
        Command::Eval(a) => (commands::eval(a), &a.shared.out),
        Command::Overlap(s) => (commands::overlap(s), &s.out),
        Command::Chain(s) => (commands::chain(s), &s.out),
        Command::Genfun(s) => (commands::genfun(s), &s.out),
        Command::Verify(a) => (commands::verify(a), &a.shared.out),
    };
    let output = match result {
        Ok(o) => o,
        Err(msg) => return usage_exit(&msg),
    };
    let written = match out {
        Some(path) => std::fs::write(path, &output.text),
        None => std::io::stdout().lock().write_all(output.text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    match output.failure {
        None => ExitCode::SUCCESS,
        Some(line) => {
            eprintln!("verification failed: {line}");
            ExitCode::from(1)
        }
    }
}
