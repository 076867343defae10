use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PlasmaError {
    #[error("grid size {0} must be a power of two and at least 2")]
    GridSize(usize),
    #[error("v_max must be positive, got {0}")]
    VMax(f64),
    #[error("wavenumber k must be positive, got {0}")]
    Wavenumber(f64),
    #[error("simulation time must be nonnegative, got {0}")]
    Time(f64),
    #[error("epsilon must lie in (0, 1], got {0}")]
    Epsilon(f64),
    #[error("background weight G[{index}] = {value} is negative")]
    NegativeWeight { index: usize, value: f64 },
    #[error("background has {got} weights but the grid has {expected} points")]
    WeightCount { expected: usize, got: usize },
    #[error("background is identically zero on the grid")]
    DegenerateBackground,
    #[error("perturbation is nonzero at index {0} where the background vanishes")]
    UnscalablePerturbation(usize),
    #[error("initial state is identically zero")]
    ZeroState,
    #[error("dispersion root finder did not converge after {iterations} steps (last zeta = {last}, |D| = {residual:e})")]
    NoConvergence {
        iterations: usize,
        last: Complex64,
        residual: f64,
    },
}
