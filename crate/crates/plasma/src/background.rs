use serde::{Deserialize, Serialize};

use crate::{PlasmaError, VelocityGrid};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BackgroundKind {
    Maxwellian,
    Custom,
}

/// Reduced background weights `G_j` sampled on the velocity grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BackgroundDistribution {
    pub weights: Vec<f64>,
    pub kind: BackgroundKind,
}

impl BackgroundDistribution {
    pub fn maxwellian(grid: &VelocityGrid) -> Self {
        let norm = (2.0 * std::f64::consts::PI).sqrt().recip();
        let weights = grid
            .velocities
            .iter()
            .map(|v| norm * (-0.5 * v * v).exp())
            .collect();
        BackgroundDistribution {
            weights,
            kind: BackgroundKind::Maxwellian,
        }
    }

    /// Tabulated weights; every entry must be nonnegative for the evolution to stay unitary.
    pub fn custom(grid: &VelocityGrid, weights: Vec<f64>) -> Result<Self, PlasmaError> {
        let bg = BackgroundDistribution {
            weights,
            kind: BackgroundKind::Custom,
        };
        bg.validate(grid)?;
        Ok(bg)
    }

    pub fn validate(&self, grid: &VelocityGrid) -> Result<(), PlasmaError> {
        if self.weights.len() != grid.n_points {
            return Err(PlasmaError::WeightCount {
                expected: grid.n_points,
                got: self.weights.len(),
            });
        }
        for (index, &value) in self.weights.iter().enumerate() {
            if !(value >= 0.0) {
                return Err(PlasmaError::NegativeWeight { index, value });
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build_grid;

    #[test]
    fn maxwellian_is_even_and_peaked() {
        let g = build_grid(32, 4.5).unwrap();
        let bg = BackgroundDistribution::maxwellian(&g);
        for j in 0..32 {
            assert_eq!(bg.weights[j], bg.weights[31 - j]);
        }
        let peak = bg.weights.iter().cloned().fold(0.0, f64::max);
        assert!(peak < 1.0 / (2.0 * std::f64::consts::PI).sqrt());
    }

    #[test]
    fn custom_rejects_negative() {
        let g = build_grid(4, 1.0).unwrap();
        let err = BackgroundDistribution::custom(&g, vec![0.1, -0.2, 0.1, 0.1]).unwrap_err();
        assert_eq!(err, PlasmaError::NegativeWeight { index: 1, value: -0.2 });
        assert!(BackgroundDistribution::custom(&g, vec![0.1; 3]).is_err());
    }
}
