use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use jrc_cli::{run, RunManifest, SweepKind, DEFAULT_SEED};
use jrc_core::sim::DEFAULT_TRIALS;

/// Monte-Carlo sweeps for flexible hybrid beamforming in joint
/// radar-communication transmitters.
#[derive(Debug, Parser)]
#[command(name = "jrc-sim", version)]
struct Args {
    /// TOML configuration; defaults apply to omitted keys.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "snr")]
    sweep: SweepKind,
    /// Communication weight in [0, 1]; overrides the configured value.
    #[arg(long)]
    rho: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    trials: usize,
    /// Output directory.
    #[arg(long, default_value = "out")]
    out: PathBuf,
    /// Also write a gnuplot script.
    #[arg(long)]
    emit_plot: bool,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let manifest = RunManifest {
        config_path: args.config,
        sweep: args.sweep,
        rho: args.rho,
        seed: args.seed,
        trials: args.trials,
        out_dir: args.out,
        emit_plot: args.emit_plot,
    };
    match run(&manifest) {
        Ok(summary) => {
            for f in &summary.files {
                println!("wrote {}", f.display());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("jrc-sim: error: {e}");
            ExitCode::FAILURE
        }
    }
}
