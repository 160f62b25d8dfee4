//! The `crossmod` binary.

use clap::Parser;
use crossmod_cli::{run, Cli, CliError};

fn main() -> anyhow::Result<()> {
    let cli = Cli::parse();
    match run(&cli.command, &cli.flags) {
        Ok(report) => {
            print!("{}", report.to_json());
            if cli.flags.verbose {
                eprintln!("{}: {:?}", report.command, report.status);
            }
            std::process::exit(report.status.exit_code());
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(CliError::exit_code(&e));
        }
    }
}
