use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::{LandauConfig, PlasmaError};

/// Rescaled initial perturbation and the field it induces through Poisson's equation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InitialState {
    pub f_prime: Vec<Complex64>,
    pub e_field: Complex64,
    pub eta: f64,
}

/// Initial data with the perturbation proportional to the background, `F̃_j = G_j`.
pub fn initial_state(cfg: &LandauConfig) -> Result<InitialState, PlasmaError> {
    let f: Vec<Complex64> = cfg.background.weights.iter().map(|&g| Complex64::new(g, 0.0)).collect();
    initial_state_from(cfg, &f)
}

/// Initial data for an arbitrary perturbation `F̃_j`.
pub fn initial_state_from(cfg: &LandauConfig, f_tilde: &[Complex64]) -> Result<InitialState, PlasmaError> {
    let grid = &cfg.grid;
    if f_tilde.len() != grid.n_points {
        return Err(PlasmaError::WeightCount {
            expected: grid.n_points,
            got: f_tilde.len(),
        });
    }
    let dv = grid.dv;
    let mut f_prime = Vec::with_capacity(grid.n_points);
    for (j, (&f, &g)) in f_tilde.iter().zip(&cfg.background.weights).enumerate() {
        if g == 0.0 {
            if f != Complex64::new(0.0, 0.0) {
                return Err(PlasmaError::UnscalablePerturbation(j));
            }
            f_prime.push(Complex64::new(0.0, 0.0));
        } else {
            f_prime.push(Complex64::i() * f * (dv / g).sqrt());
        }
    }
    let e_field = Complex64::i() / cfg.k * f_tilde.iter().sum::<Complex64>() * dv;
    let norm_sq = e_field.norm_sqr() + f_prime.iter().map(|z| z.norm_sqr()).sum::<f64>();
    if norm_sq == 0.0 {
        return Err(PlasmaError::ZeroState);
    }
    Ok(InitialState {
        f_prime,
        e_field,
        eta: norm_sq.sqrt().recip(),
    })
}

impl InitialState {
    /// Unit-norm data vector `η·(F̃′_0, …, F̃′_{N_v−1}, Ẽ)`.
    pub fn data_vector(&self) -> Vec<Complex64> {
        self.f_prime
            .iter()
            .chain(std::iter::once(&self.e_field))
            .map(|z| z * self.eta)
            .collect()
    }
}
