use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use relamp::{configure_threads, exit_code, validate_config};

#[derive(Parser)]
#[command(
    name = "relamp",
    about = "Relativistic probability-amplitude toolkit: scenario runner",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RunArgs {
    /// Path to the JSON configuration.
    #[arg(long)]
    config: PathBuf,
    /// Output directory (created if missing).
    #[arg(long, default_value = "relamp-out")]
    out: PathBuf,
    /// Override the configuration's random seed.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Gaussian wave-packet spreading curves.
    Spread(RunArgs),
    /// Dispersion relation and group-velocity table.
    Dispersion(RunArgs),
    /// Conservation-law residual sweeps on a random band-limited field.
    CurrentsCheck(RunArgs),
    /// Relativistically corrected oscillator report.
    Oscillator(RunArgs),
    /// Lorentz boosts of a probability 4-current.
    Boost(RunArgs),
    /// Validate a configuration and echo its normalized form.
    Validate {
        #[arg(long)]
        config: PathBuf,
    },
}

fn load(path: &PathBuf) -> Result<relamp::ScenarioConfig, ExitCode> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        eprintln!("error: cannot read config {path:?}: {e}");
        ExitCode::from(2)
    })?;
    validate_config(&text).map_err(|errors| {
        eprintln!("error: invalid configuration {path:?}:");
        for e in &errors {
            eprintln!("  - {e}");
        }
        ExitCode::from(2)
    })
}

fn run(expected: &str, args: &RunArgs) -> ExitCode {
    let mut config = match load(&args.config) {
        Ok(c) => c,
        Err(code) => return code,
    };
    if config.params.name() != expected {
        eprintln!(
            "error: config {:?} declares scenario '{}' but the '{expected}' command was invoked",
            args.config,
            config.params.name()
        );
        return ExitCode::from(2);
    }
    if let Some(seed) = args.seed {
        config.seed = seed;
    }
    match relamp::execute(&config, &args.out) {
        Ok(paths) => {
            for path in paths {
                println!("wrote {}", path.display());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error [{expected}]: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}

fn main() -> ExitCode {
    if let Err(message) = configure_threads() {
        eprintln!("error: {message}");
        return ExitCode::from(2);
    }
    let cli = Cli::parse();
    match &cli.command {
        Command::Spread(args) => run("spread", args),
        Command::Dispersion(args) => run("dispersion", args),
        Command::CurrentsCheck(args) => run("currents-check", args),
        Command::Oscillator(args) => run("oscillator", args),
        Command::Boost(args) => run("boost", args),
        Command::Validate { config } => match load(config) {
            Ok(config) => {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&config.normalized())
                        .expect("normalized config serializes")
                );
                ExitCode::SUCCESS
            }
            Err(code) => code,
        },
    }
}
