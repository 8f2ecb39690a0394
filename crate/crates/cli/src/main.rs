use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use negsums_cli::{execute, render, Cli, CliError};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let outcome = match execute(&cli) {
        Ok(o) => o,
        Err(e) => return fail(&e),
    };
    let text = match render(&outcome.document, outcome.format) {
        Ok(t) => t,
        Err(error) => {
            return fail(&CliError::Parse {
                input: outcome.document.meta.input.clone(),
                error,
            })
        }
    };
    if std::io::stdout().lock().write_all(text.as_bytes()).is_err() {
        return ExitCode::from(1);
    }
    ExitCode::from(outcome.exit_code)
}

fn fail(e: &CliError) -> ExitCode {
    eprintln!("negsums: {e}");
    ExitCode::from(e.exit_code())
}
