use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use fracdiff::cli::{execute, Cli};

fn main() -> ExitCode {
    let command = Cli::parse().into_command();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match execute(&command, &mut out).and_then(|()| out.flush().map_err(fracdiff::cli::CliError::Output)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("fracdiff: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
