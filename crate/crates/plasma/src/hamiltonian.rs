use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::{LandauConfig, PlasmaError};

/// Real symmetric arrowhead matrix of dimension `N_v + 1`.
///
/// Rows `0..N_v` are velocity components; row `N_v` is the electric field.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArrowheadHamiltonian {
    pub dimension: usize,
    /// `k·v_j`
    pub diag: Vec<f64>,
    /// `α_j·v_j` with `α_j = sqrt(Δv·G_j)`
    pub border: Vec<f64>,
    pub alpha: Vec<f64>,
}

pub fn build_hamiltonian(cfg: &LandauConfig) -> Result<ArrowheadHamiltonian, PlasmaError> {
    cfg.background.validate(&cfg.grid)?;
    let dv = cfg.grid.dv;
    let alpha: Vec<f64> = cfg.background.weights.iter().map(|g| (dv * g).sqrt()).collect();
    let diag = cfg.grid.velocities.iter().map(|v| cfg.k * v).collect();
    let border = cfg
        .grid
        .velocities
        .iter()
        .zip(&alpha)
        .map(|(v, a)| a * v)
        .collect();
    Ok(ArrowheadHamiltonian {
        dimension: cfg.grid.n_points + 1,
        diag,
        border,
        alpha,
    })
}

impl ArrowheadHamiltonian {
    pub fn n_v(&self) -> usize {
        self.dimension - 1
    }

    pub fn entry(&self, j: usize, k: usize) -> f64 {
        let n = self.n_v();
        match (j == n, k == n) {
            (true, true) => 0.0,
            (true, false) => self.border[k],
            (false, true) => self.border[j],
            (false, false) if j == k => self.diag[j],
            _ => 0.0,
        }
    }

    pub fn to_dense(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.dimension, self.dimension, |j, k| self.entry(j, k))
    }

    /// `H·x` in O(N_v).
    pub fn apply(&self, x: &[Complex64]) -> Vec<Complex64> {
        let n = self.n_v();
        assert_eq!(x.len(), self.dimension);
        let mut y: Vec<Complex64> = (0..n).map(|j| x[j] * self.diag[j] + x[n] * self.border[j]).collect();
        y.push((0..n).map(|j| x[j] * self.border[j]).sum());
        y
    }

    /// Largest eigenvalue magnitude from a dense symmetric eigensolve.
    pub fn spectral_norm(&self) -> f64 {
        self.to_dense()
            .symmetric_eigenvalues()
            .iter()
            .fold(0.0_f64, |m, l| m.max(l.abs()))
    }
}
