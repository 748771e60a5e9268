use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use robin_lab::cli::Cli;
use robin_lab::{emit, resolve_config, run};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    let result = resolve_config(cli).and_then(|config| {
        let outcome = run(&config)?;
        emit(&outcome.text, config.output.as_deref())?;
        Ok(outcome.success)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
