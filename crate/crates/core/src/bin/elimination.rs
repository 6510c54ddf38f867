use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use elimination::job::{run_text, RunOptions};
use elimination::resultant::Mode;

/// Run a JSON job (resultant, intersection, norm, cube-verify, selftest)
/// and write the report as JSON.
#[derive(Parser, Debug)]
#[command(name = "elimination", version)]
struct Args {
    /// Job file; `-` reads standard input.
    #[arg(long)]
    job: PathBuf,
    /// Resultant path: auto, macaulay, poisson or crosscheck.
    #[arg(long)]
    mode: Option<Mode>,
    /// Seed for randomized suites.
    #[arg(long)]
    seed: Option<u64>,
    /// Report destination; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let text = if args.job.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(&args.job)
    };
    let text = match text {
        Ok(t) => t,
        Err(e) => {
            eprintln!("elimination: cannot read {}: {e}", args.job.display());
            return ExitCode::from(2);
        }
    };
    let report = run_text(
        &text,
        RunOptions {
            mode: args.mode,
            seed: args.seed,
        },
    );
    let json = report.to_json();
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &json) {
                eprintln!("elimination: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{json}"),
    }
    ExitCode::from(report.exit_code as u8)
}
