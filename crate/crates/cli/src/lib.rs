//! Library side of the `robin-lab` command line.

pub mod cli;
pub mod commands;
pub mod config;
pub mod error;
pub mod output;

use std::path::Path;

use config::{Job, RunConfig};
use error::CliResult;

/// Rendered output plus the process status it implies.
pub struct RunOutcome {
    pub text: String,
    pub success: bool,
}

/// Command-line options override the corresponding config fields.
pub fn resolve_config(cli: cli::Cli) -> CliResult<RunConfig> {
    let mut config = match (&cli.config, cli.command) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| error::usage(format!("cannot read config {}: {e}", path.display())))?;
            RunConfig::from_json(&text)?
        }
        (Some(_), Some(_)) => return Err(error::usage("--config cannot be combined with a subcommand")),
        (None, Some(cmd)) => cmd.into_config(),
        (None, None) => return Err(error::usage("no subcommand given; see --help")),
    };
    if cli.format.is_some() {
        config.format = cli.format;
    }
    if cli.output.is_some() {
        config.output = cli.output;
    }
    Ok(config)
}

pub fn run(config: &RunConfig) -> CliResult<RunOutcome> {
    let job = Job::try_from(config)?;
    match commands::execute(&job)? {
        commands::Executed::Data(out) => Ok(RunOutcome {
            text: out.render(config.format.unwrap_or_default())?,
            success: true,
        }),
        commands::Executed::Validation(results) => {
            let success = results.iter().all(|c| c.passed);
            let text = match config.format {
                None => commands::validate_text(&results),
                Some(f) => commands::validation_output(&results).render(f)?,
            };
            Ok(RunOutcome { text, success })
        }
    }
}

pub fn emit(text: &str, output: Option<&Path>) -> CliResult<()> {
    use std::io::Write;
    match output {
        Some(path) => std::fs::write(path, text)?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
        }
    }
    Ok(())
}

pub use output::{Cell, Output, Record};
