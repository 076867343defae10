use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::{LandauConfig, PlasmaError};

/// Parameters of the state-preparation block encoding of `β·H`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EncodingParams {
    pub g_max: f64,
    pub gamma_cap: f64,
    pub c_sq: f64,
    pub beta: f64,
    pub lambda_bound: f64,
    pub lambda_prime: f64,
    pub d: Vec<Complex64>,
    pub b: Vec<Complex64>,
}

/// Principal square root of a real number, purely imaginary for negative input.
fn real_sqrt(x: f64) -> Complex64 {
    if x < 0.0 {
        Complex64::new(0.0, (-x).sqrt())
    } else {
        Complex64::new(x.sqrt(), 0.0)
    }
}

pub fn compute_encoding(cfg: &LandauConfig) -> Result<EncodingParams, PlasmaError> {
    if !(cfg.k > 0.0) {
        return Err(PlasmaError::Wavenumber(cfg.k));
    }
    cfg.background.validate(&cfg.grid)?;
    let grid = &cfg.grid;
    let g = &cfg.background.weights;
    let (nv, vmax, dv, k) = (grid.n_points as f64, grid.v_max, grid.dv, cfg.k);

    let g_max = grid
        .velocities
        .iter()
        .zip(g)
        .fold(0.0_f64, |m, (v, w)| m.max((v * w).abs()));
    if g_max == 0.0 {
        return Err(PlasmaError::DegenerateBackground);
    }
    let gamma_cap = k * k * vmax / (dv * nv * g_max);
    // Rationalised form; the direct one cancels when gamma_cap is large.
    let c_sq = 2.0 / (1.0 + (1.0 + 4.0 / gamma_cap).sqrt());
    let beta = c_sq / (k * vmax);
    let lambda_bound = k * vmax + (dv * nv * vmax * g_max).sqrt();
    let second_moment: f64 = grid.velocities.iter().zip(g).map(|(v, w)| v * v * w * dv).sum();
    let lambda_prime = k * vmax + second_moment.sqrt();

    let d = grid.velocities.iter().map(|v| real_sqrt(v / vmax)).collect();
    let b = grid
        .velocities
        .iter()
        .zip(g)
        .map(|(v, w)| real_sqrt(v * w / g_max))
        .collect();

    Ok(EncodingParams {
        g_max,
        gamma_cap,
        c_sq,
        beta,
        lambda_bound,
        lambda_prime,
        d,
        b,
    })
}

impl EncodingParams {
    pub fn c(&self) -> f64 {
        self.c_sq.sqrt()
    }

    /// Diagonal overlap `c²·d_j²`.
    pub fn omega(&self, j: usize) -> Complex64 {
        self.d[j] * self.d[j] * self.c_sq
    }

    /// Border overlap `sqrt(1 − c²)·d_j·b_j / sqrt(N_v)`.
    pub fn upsilon(&self, j: usize) -> Complex64 {
        let nv = self.d.len() as f64;
        self.d[j] * self.b[j] * ((1.0 - self.c_sq).sqrt() / nv.sqrt())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build_hamiltonian;

    #[test]
    fn endpoint_rotations() {
        let enc = compute_encoding(&LandauConfig::reference()).unwrap();
        assert_eq!(enc.d[31], Complex64::new(1.0, 0.0));
        assert_eq!(enc.d[0], Complex64::new(0.0, 1.0));
    }

    #[test]
    fn overlaps_match_scaled_hamiltonian() {
        let cfg = LandauConfig::reference();
        let enc = compute_encoding(&cfg).unwrap();
        let h = build_hamiltonian(&cfg).unwrap();
        for j in 0..32 {
            assert!((enc.omega(j) - enc.beta * h.diag[j]).norm() < 1e-12);
            assert!((enc.upsilon(j) - enc.beta * h.border[j]).norm() < 1e-12);
        }
    }

    #[test]
    fn rejects_degenerate_background() {
        let mut cfg = LandauConfig::reference();
        cfg.background.weights = vec![0.0; 32];
        assert_eq!(compute_encoding(&cfg), Err(PlasmaError::DegenerateBackground));
    }
}
