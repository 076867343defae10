use serde::{Deserialize, Serialize};

use crate::PlasmaError;

/// Uniform, parity-symmetric velocity grid with endpoints at `±v_max`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VelocityGrid {
    pub n_points: usize,
    pub v_max: f64,
    pub dv: f64,
    pub velocities: Vec<f64>,
}

impl VelocityGrid {
    /// Number of qubits needed to index the grid.
    pub fn n_qubits(&self) -> usize {
        self.n_points.trailing_zeros() as usize
    }

    pub fn len(&self) -> usize {
        self.n_points
    }

    pub fn is_empty(&self) -> bool {
        self.n_points == 0
    }
}

pub fn build_grid(n_points: usize, v_max: f64) -> Result<VelocityGrid, PlasmaError> {
    if n_points < 2 || !n_points.is_power_of_two() {
        return Err(PlasmaError::GridSize(n_points));
    }
    if !(v_max > 0.0) || !v_max.is_finite() {
        return Err(PlasmaError::VMax(v_max));
    }
    let dv = 2.0 * v_max / (n_points as f64 - 1.0);
    // Fill from both ends so that v[N-1-j] = -v[j] holds bit for bit.
    let mut velocities = vec![0.0; n_points];
    for j in 0..n_points / 2 {
        let v = -v_max + j as f64 * dv;
        velocities[j] = v;
        velocities[n_points - 1 - j] = -v;
    }
    Ok(VelocityGrid {
        n_points,
        v_max,
        dv,
        velocities,
    })
}
