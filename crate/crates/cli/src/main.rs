use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use vlasim::{
    cmd_dispersion, cmd_fit, cmd_readout_demo, cmd_simulate, cmd_sweep_error, cmd_verify_encoding, CliError,
    ExperimentConfig, PathChoice, RunKind,
};

#[derive(Parser, Debug)]
#[command(name = "vlasim", version, about = "Qubitized simulation of linear Landau damping")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// JSON experiment config; defaults reproduce the reference run.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output directory.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Which evolution to run.
    #[arg(long, global = true, value_enum)]
    path: Option<PathChoice>,
    /// Comma-separated tolerances.
    #[arg(long, global = true, value_delimiter = ',')]
    epsilon: Option<Vec<f64>>,
    /// Comma-separated wavenumbers.
    #[arg(long, global = true, value_delimiter = ',')]
    k: Option<Vec<f64>>,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Command {
    /// Field time series from the oracle and/or the circuit.
    Simulate,
    /// Query count and achieved error against the requested tolerance.
    SweepError,
    /// Dispersion-relation roots and weak-damping estimates.
    Dispersion,
    /// Damped-sinusoid fit to a field series.
    Fit,
    /// Extract and check the block encoding.
    VerifyEncoding,
    /// Preparation, phase retrieval and amplitude-estimation figures.
    ReadoutDemo,
}

impl Command {
    fn kind(self) -> RunKind {
        match self {
            Command::Simulate => RunKind::Simulate,
            Command::SweepError => RunKind::SweepError,
            Command::Dispersion => RunKind::Dispersion,
            Command::Fit => RunKind::Fit,
            Command::VerifyEncoding => RunKind::VerifyEncoding,
            Command::ReadoutDemo => RunKind::ReadoutDemo,
        }
    }
}

fn build_config(cli: &Cli) -> Result<ExperimentConfig, CliError> {
    let mut cfg = match &cli.config {
        Some(p) => ExperimentConfig::load(p)?,
        None => ExperimentConfig::default(),
    };
    cfg.run = cli.command.kind();
    if let Some(o) = &cli.out {
        cfg.output_dir = o.clone();
    }
    if let Some(s) = cli.seed {
        cfg.seed = s;
    }
    if let Some(p) = cli.path {
        cfg.path = p;
    }
    if let Some(e) = &cli.epsilon {
        cfg.epsilons = e.clone();
        // A single tolerance also sets the simulation target.
        if let [one] = e.as_slice() {
            cfg.physics.epsilon = *one;
        }
    }
    if let Some(k) = &cli.k {
        cfg.ks = k.clone();
        if let [one] = k.as_slice() {
            cfg.physics.k = *one;
        }
    }
    cfg.validate()?;
    Ok(cfg)
}

fn run(cfg: &ExperimentConfig) -> Result<(), CliError> {
    match cfg.run {
        RunKind::Simulate => {
            let out = cmd_simulate(cfg)?;
            for f in out.files {
                println!("{}", f.display());
            }
        }
        RunKind::SweepError => println!("{}", cmd_sweep_error(cfg)?.1.display()),
        RunKind::Dispersion => {
            let (rows, path) = cmd_dispersion(cfg)?;
            println!("{}", path.display());
            if rows.iter().any(|r| !r.converged) {
                return Err(CliError::Numerical("dispersion solver did not converge for every k".into()));
            }
        }
        RunKind::Fit => println!("{}", cmd_fit(cfg)?.1.display()),
        RunKind::VerifyEncoding => println!("{}", cmd_verify_encoding(cfg)?.1.display()),
        RunKind::ReadoutDemo => println!("{}", cmd_readout_demo(cfg)?.1.display()),
    }
    Ok(())
}

fn write_failure(e: &CliError, dir: &std::path::Path) {
    if std::fs::create_dir_all(dir).is_ok() {
        if let Ok(text) = serde_json::to_string_pretty(&e.record()) {
            let _ = std::fs::write(dir.join("failure.json"), text + "\n");
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("VLASIM_LOG", "warn")).init();
    let cli = Cli::parse();
    let result = build_config(&cli).and_then(|cfg| {
        run(&cfg).inspect_err(|e| write_failure(e, &cfg.output_dir))
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
