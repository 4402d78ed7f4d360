//! Binary entry point: argument parsing, dispatch, and exit-code mapping.

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use weylkit_cli::{run, Cli, CliError};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(error) => {
            let informational =
                matches!(error.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            // Help and version go to stdout, argument errors to stderr.
            let _ = error.print();
            return if informational { ExitCode::SUCCESS } else { ExitCode::from(1) };
        }
    };
    match run(cli) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(error @ CliError::Disagreement(_)) => {
            // The differing coefficient is the result of the comparison, so
            // it belongs on stdout; the exit code carries the verdict.
            println!("{error}");
            ExitCode::from(3)
        }
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(error.exit_code() as u8)
        }
    }
}
