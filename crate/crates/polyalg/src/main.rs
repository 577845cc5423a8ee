use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use log::info;
use polyalg::{Command, ExperimentConfig, HarnessError, Mode};

/// Exact experiments on the intersection-product polytope algebra.
#[derive(Debug, Parser)]
#[command(name = "polyalg", version)]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    /// JSON experiment config.
    #[arg(long)]
    config: PathBuf,
    /// Overrides the config seed.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum)]
    mode: Option<Mode>,
    /// Report path; overrides the config `output`. Without either, the
    /// report goes to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn configure(cli: &Cli) -> Result<ExperimentConfig, HarnessError> {
    let mut config = ExperimentConfig::load(&cli.config)?;
    match config.command {
        Some(c) if c != cli.command => {
            return Err(HarnessError::Config(format!("config is for {c}, command line asks for {}", cli.command)));
        }
        _ => config.command = Some(cli.command),
    }
    if let Some(seed) = cli.seed {
        config.seed = seed;
    }
    if let Some(mode) = cli.mode {
        config.mode = mode;
    }
    if let Some(out) = &cli.out {
        config.output = Some(out.clone());
    }
    Ok(config)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = configure(&cli).and_then(|config| {
        info!("running {} with n = {}, {} trials", cli.command, config.n, config.trials);
        let report = polyalg::run(&config)?;
        match &config.output {
            Some(path) => {
                report.write(path)?;
                eprint!("{}", report.text_summary());
            }
            None => println!("{}", report.to_json()?),
        }
        Ok(report.exit_code())
    });
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("polyalg: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
