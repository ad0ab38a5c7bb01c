mod args;
mod commands;
mod error;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use error::CliError;

fn run(cli: &Cli) -> Result<i32, CliError> {
    let mut out = std::io::stdout().lock();
    match &cli.command {
        Command::Eval(cmd) => commands::eval(cmd, cli.precision, cli.format, &mut out).map(|_| 0),
        Command::Expand(a) => commands::expand(a, cli.precision, cli.format, &mut out).map(|_| 0),
        Command::Transform(a) => commands::transform(a, cli.format, &mut out).map(|_| 0),
        Command::Verify(a) => commands::verify(a, cli.precision, cli.format, &mut out),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            if e.exit_code() == 3 {
                eprintln!("hint: precision targets must be at least 1e-14; try a larger --precision");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
