use std::process::ExitCode;

use anyhow::Context;
use clap::Parser;
use qha_cli::{run, Cli, CliError};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // Usage errors are input errors; exit 2 is reserved for violations.
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match execute(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => match e.downcast_ref::<CliError>() {
            Some(c) => {
                eprintln!("error[{}]: {c}", c.code());
                ExitCode::from(c.exit_code() as u8)
            }
            None => {
                eprintln!("error: {e:#}");
                ExitCode::from(1)
            }
        },
    }
}

fn execute(cli: &Cli) -> anyhow::Result<u8> {
    let outcome = run(&cli.command)?;
    print!("{}", outcome.text);
    if let Some(path) = &cli.json {
        std::fs::write(path, outcome.report.to_json()).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(outcome.exit_code() as u8)
}
