use std::io;
use std::process::ExitCode;

use clap::Parser;

mod args;
mod commands;
mod failure;
mod report;

fn main() -> ExitCode {
    let cli = args::Cli::parse();
    let stdout = io::stdout();
    match commands::run(cli, &mut stdout.lock()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("psreg: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
