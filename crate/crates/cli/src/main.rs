mod commands;
mod manifest;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "alphapatch", version, about = "Validated convexity and rotation proofs for alpha-patches, and a contour simulator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Directory for certificates, region files and the run manifest.
    #[arg(long, default_value = "out")]
    pub out_dir: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Certify the curvature and zone-derivative sign facts of the bump curve.
    ProveLemma(commands::LemmaArgs),
    /// Certify the non-rotation integral for ellipses.
    ProveRotation(commands::RotationArgs),
    /// Certify the sign of the curvature derivative over alpha ranges.
    ProveConvexity(commands::ConvexityArgs),
    /// Evolve a patch boundary and record snapshots and diagnostics.
    Simulate(commands::SimulateArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::ProveLemma(a) => commands::prove_lemma(&a),
        Command::ProveRotation(a) => commands::prove_rotation(&a),
        Command::ProveConvexity(a) => commands::prove_convexity(&a),
        Command::Simulate(a) => commands::simulate(&a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
