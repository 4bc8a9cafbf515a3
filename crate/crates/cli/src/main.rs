use std::process::ExitCode;

use clap::Parser;
use coxideal_cli::{run, Cli};

fn main() -> ExitCode {
    // clap exits with status 2 on malformed arguments.
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("coxideal: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
