//! `lur` — certify two-qubit entanglement, steering, and Bell nonlocality
//! with local-uncertainty witnesses.
//!
//! Subcommands compute classical bounds and quantum maxima (`bounds`), sweep
//! witness values over the noisy-singlet family (`sweep`), locate violation
//! thresholds (`thresholds`), run simulated state tomography (`tomo`), and
//! print the Pauli-twirl preparation weights (`decompose`).
//!
//! Exit codes: 0 on success, 1 on a computation-level failure, 2 on a usage
//! error.

use std::process::ExitCode;

use clap::Parser;

mod commands;
mod output;

#[derive(Parser)]
#[command(
    name = "lur",
    version,
    about = "Certify two-qubit entanglement, steering, and Bell nonlocality \
             through local-uncertainty witnesses"
)]
struct Cli {
    #[command(subcommand)]
    command: commands::Command,
}

fn main() -> ExitCode {
    // Clap itself exits with code 2 on malformed flags.
    let cli = Cli::parse();
    match cli.command.run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) if err.is::<commands::UsageError>() => {
            eprintln!("usage error: {err:#}");
            ExitCode::from(2)
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}
