use thiserror::Error;
use vlasim_oracle::OracleError;
use vlasim_plasma::PlasmaError;
use vlasim_statevector::StateError;

#[derive(Debug, Error)]
pub enum QubitizationError {
    #[error(transparent)]
    Plasma(#[from] PlasmaError),
    #[error(transparent)]
    State(#[from] StateError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("grid has {grid} points but the velocity register holds {register}")]
    Layout { grid: usize, register: usize },
    #[error("phase completion failed for n = {n}: {reason}")]
    Completion { n: usize, reason: String },
    #[error("schedule needs n = {needed} but the cap is {cap}")]
    TooManyPhases { needed: usize, cap: usize },
    #[error("input must lie in the good subspace with zero unused components (leak {leak:.3e})")]
    InputNotGood { leak: f64 },
    #[error("input has dimension {got}, expected {expected}")]
    InputDimension { expected: usize, got: usize },
    #[error("schedule json: {0}")]
    Json(#[from] serde_json::Error),
}
