use serde::{Deserialize, Serialize};

use crate::{build_grid, BackgroundDistribution, PlasmaError, VelocityGrid};

/// Physical and numerical parameters of one Landau damping run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LandauConfig {
    pub k: f64,
    pub grid: VelocityGrid,
    pub background: BackgroundDistribution,
    pub t: f64,
    pub epsilon: f64,
}

impl LandauConfig {
    pub fn maxwellian(k: f64, n_points: usize, v_max: f64, t: f64, epsilon: f64) -> Result<Self, PlasmaError> {
        let grid = build_grid(n_points, v_max)?;
        let background = BackgroundDistribution::maxwellian(&grid);
        let cfg = LandauConfig {
            k,
            grid,
            background,
            t,
            epsilon,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// The reference test case: k = 0.4, 32 points on [-4.5, 4.5], t = 8π.
    pub fn reference() -> Self {
        Self::maxwellian(0.4, 32, 4.5, 8.0 * std::f64::consts::PI, 1e-3).expect("reference config is valid")
    }

    pub fn validate(&self) -> Result<(), PlasmaError> {
        if !(self.k > 0.0) || !self.k.is_finite() {
            return Err(PlasmaError::Wavenumber(self.k));
        }
        if !(self.t >= 0.0) || !self.t.is_finite() {
            return Err(PlasmaError::Time(self.t));
        }
        if !(self.epsilon > 0.0 && self.epsilon <= 1.0) {
            return Err(PlasmaError::Epsilon(self.epsilon));
        }
        let rebuilt = build_grid(self.grid.n_points, self.grid.v_max)?;
        if rebuilt.dv.to_bits() != self.grid.dv.to_bits() || rebuilt.velocities != self.grid.velocities {
            return Err(PlasmaError::VMax(self.grid.v_max));
        }
        self.background.validate(&self.grid)
    }

    pub fn with_time(&self, t: f64) -> Self {
        LandauConfig { t, ..self.clone() }
    }

    pub fn with_epsilon(&self, epsilon: f64) -> Self {
        LandauConfig { epsilon, ..self.clone() }
    }
}
