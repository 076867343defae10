//! Exact evolution `x(t) = V·e^{−iΛt}·Vᵀ·x0` for the arrowhead Hamiltonian.

mod series;

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;
use thiserror::Error;
use vlasim_plasma::{ArrowheadHamiltonian, InitialState};

pub use series::{read_series_csv, write_series_csv, TimeSeries};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OracleError {
    #[error("eigendecomposition failed: {0}")]
    Eigensolver(String),
    #[error("state has {got} components, Hamiltonian has dimension {expected}")]
    Dimension { expected: usize, got: usize },
    #[error("sample times must be finite, nonnegative and sorted (offending index {0})")]
    Times(usize),
    #[error("malformed series file at line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("i/o error: {0}")]
    Io(String),
}

#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub eigenvalues: Vec<f64>,
    /// Orthonormal eigenvectors as columns.
    pub eigenvectors: DMatrix<f64>,
}

pub fn eigendecompose(h: &ArrowheadHamiltonian) -> Result<EigenDecomposition, OracleError> {
    let dense = h.to_dense();
    let eig = SymmetricEigen::try_new(dense.clone(), f64::EPSILON, 10_000)
        .ok_or_else(|| OracleError::Eigensolver("no convergence".into()))?;
    let out = EigenDecomposition {
        eigenvalues: eig.eigenvalues.iter().copied().collect(),
        eigenvectors: eig.eigenvectors,
    };
    if out.eigenvalues.iter().any(|l| !l.is_finite()) {
        return Err(OracleError::Eigensolver("non-finite eigenvalue".into()));
    }
    let defect = out.reconstruction_error(&dense);
    if defect > 1e-10 {
        return Err(OracleError::Eigensolver(format!("reconstruction error {defect:e}")));
    }
    Ok(out)
}

impl EigenDecomposition {
    pub fn dimension(&self) -> usize {
        self.eigenvalues.len()
    }

    /// `max |V·Λ·Vᵀ − H|`.
    pub fn reconstruction_error(&self, h: &DMatrix<f64>) -> f64 {
        let v = &self.eigenvectors;
        let l = DMatrix::from_diagonal(&DVector::from_vec(self.eigenvalues.clone()));
        (v * l * v.transpose() - h).amax()
    }

    /// Coefficients of `x` in the eigenbasis.
    pub fn project(&self, x: &[Complex64]) -> Result<Vec<Complex64>, OracleError> {
        let n = self.dimension();
        if x.len() != n {
            return Err(OracleError::Dimension { expected: n, got: x.len() });
        }
        Ok((0..n)
            .map(|m| (0..n).map(|j| x[j] * self.eigenvectors[(j, m)]).sum())
            .collect())
    }

    /// Evolves eigenbasis coefficients to time `t` and maps back.
    pub fn evolve_coeffs(&self, coeffs: &[Complex64], t: f64) -> Vec<Complex64> {
        let n = self.dimension();
        let phased: Vec<Complex64> = coeffs
            .iter()
            .zip(&self.eigenvalues)
            .map(|(c, l)| c * Complex64::from_polar(1.0, -l * t))
            .collect();
        (0..n)
            .map(|j| (0..n).map(|m| phased[m] * self.eigenvectors[(j, m)]).sum())
            .collect()
    }

    pub fn evolve(&self, x: &[Complex64], t: f64) -> Result<Vec<Complex64>, OracleError> {
        Ok(self.evolve_coeffs(&self.project(x)?, t))
    }
}

/// `e^{−iHt}·x0` for the normalized initial data vector.
pub fn exact_evolve(h: &ArrowheadHamiltonian, x0: &InitialState, t: f64) -> Result<Vec<Complex64>, OracleError> {
    eigendecompose(h)?.evolve(&x0.data_vector(), t)
}

/// Electric-field samples at `times`, sharing one eigendecomposition.
///
/// The field is reported in the physical normalization `Ẽ(t)`, i.e. the
/// last component of the evolved unit vector divided by `η`.
pub fn evolve_series(
    h: &ArrowheadHamiltonian,
    x0: &InitialState,
    times: &[f64],
    keep_snapshots: bool,
) -> Result<TimeSeries, OracleError> {
    check_times(times)?;
    let eig = eigendecompose(h)?;
    let coeffs = eig.project(&x0.data_vector())?;
    let n = h.n_v();
    let mut e_field = Vec::with_capacity(times.len());
    let mut snaps = Vec::new();
    for &t in times {
        let x = eig.evolve_coeffs(&coeffs, t);
        e_field.push(x[n] / x0.eta);
        if keep_snapshots {
            snaps.push(x[..n].iter().map(|z| z / x0.eta).collect());
        }
    }
    Ok(TimeSeries {
        times: times.to_vec(),
        e_field,
        f_prime: keep_snapshots.then_some(snaps),
    })
}

pub fn check_times(times: &[f64]) -> Result<(), OracleError> {
    for (i, &t) in times.iter().enumerate() {
        if !(t >= 0.0) || !t.is_finite() || (i > 0 && t < times[i - 1]) {
            return Err(OracleError::Times(i));
        }
    }
    Ok(())
}

/// Uniform samples `0, dt, 2dt, …` up to and including `t_end` (within rounding).
pub fn uniform_times(t_end: f64, dt: f64) -> Vec<f64> {
    let n = (t_end / dt + 1e-9).floor() as usize;
    (0..=n).map(|i| i as f64 * dt).collect()
}
