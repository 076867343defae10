//! Experiment configuration. All quantities are dimensionless: velocities in
//! thermal speeds, lengths in Debye lengths, times in inverse plasma periods.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use vlasim_plasma::{build_grid, BackgroundDistribution, LandauConfig};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum, Default)]
#[serde(rename_all = "snake_case")]
pub enum PathChoice {
    #[default]
    Oracle,
    Circuit,
    Both,
}

impl PathChoice {
    pub fn oracle(self) -> bool {
        matches!(self, PathChoice::Oracle | PathChoice::Both)
    }

    pub fn circuit(self) -> bool {
        matches!(self, PathChoice::Circuit | PathChoice::Both)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum RunKind {
    #[default]
    Simulate,
    Dispersion,
    Fit,
    SweepError,
    VerifyEncoding,
    ReadoutDemo,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct PhysicsConfig {
    pub k: f64,
    pub n_points: usize,
    pub v_max: f64,
    pub t: f64,
    pub epsilon: f64,
    /// Custom background weights on the grid; Maxwellian when absent.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub background: Option<Vec<f64>>,
}

impl Default for PhysicsConfig {
    fn default() -> Self {
        PhysicsConfig {
            k: 0.4,
            n_points: 32,
            v_max: 4.5,
            t: 8.0 * std::f64::consts::PI,
            epsilon: 1e-3,
            background: None,
        }
    }
}

impl PhysicsConfig {
    pub fn landau(&self) -> Result<LandauConfig, CliError> {
        let cfg = match &self.background {
            None => LandauConfig::maxwellian(self.k, self.n_points, self.v_max, self.t, self.epsilon)?,
            Some(w) => {
                let grid = build_grid(self.n_points, self.v_max)?;
                let background = BackgroundDistribution::custom(&grid, w.clone())?;
                let cfg = LandauConfig {
                    k: self.k,
                    grid,
                    background,
                    t: self.t,
                    epsilon: self.epsilon,
                };
                cfg.validate()?;
                cfg
            }
        };
        Ok(cfg)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ExperimentConfig {
    pub physics: PhysicsConfig,
    pub run: RunKind,
    pub output_dir: PathBuf,
    pub seed: u64,
    pub sample_dt: f64,
    pub path: PathChoice,
    /// Tolerances for the error sweep.
    pub epsilons: Vec<f64>,
    /// Wavenumbers for the dispersion table and encoding checks.
    pub ks: Vec<f64>,
    /// Series to fit; the oracle series is generated when absent.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub series_csv: Option<PathBuf>,
    pub fit_window: [f64; 2],
    /// Amplitude-estimation iterations `M` for the readout demo.
    pub ae_iterations: usize,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            physics: PhysicsConfig::default(),
            run: RunKind::default(),
            output_dir: PathBuf::from("out"),
            seed: 0,
            sample_dt: 0.05,
            path: PathChoice::Oracle,
            epsilons: (1..=8).map(|k| 10f64.powi(-k)).collect(),
            ks: vec![0.4],
            series_csv: None,
            fit_window: [2.0 * std::f64::consts::PI, 8.0 * std::f64::consts::PI],
            ae_iterations: 100,
        }
    }
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        // serde_json errors carry the line and column.
        let cfg: ExperimentConfig = serde_json::from_str(text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        self.physics.landau()?;
        if !(self.sample_dt > 0.0) || !self.sample_dt.is_finite() {
            return Err(CliError::Config(format!("sample_dt must be positive, got {}", self.sample_dt)));
        }
        if let Some(e) = self.epsilons.iter().find(|e| !(**e > 0.0 && **e < 1.0)) {
            return Err(CliError::Config(format!("epsilon {e} outside (0, 1)")));
        }
        if let Some(k) = self.ks.iter().find(|k| !(**k > 0.0) || !k.is_finite()) {
            return Err(CliError::Config(format!("wavenumber {k} must be positive")));
        }
        if !(self.fit_window[0] < self.fit_window[1]) {
            return Err(CliError::Config("fit_window must be increasing".into()));
        }
        if self.ae_iterations == 0 {
            return Err(CliError::Config("ae_iterations must be at least 1".into()));
        }
        Ok(())
    }
}
