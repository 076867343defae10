use thiserror::Error;
use vlasim_statevector::StateError;

#[derive(Debug, Error)]
pub enum ReadoutError {
    #[error(transparent)]
    State(#[from] StateError),
    #[error("initial state has no velocity component to scale by")]
    ZeroInput,
    #[error("amplitude {index} is neither real nor imaginary; the rotation gate set cannot load it")]
    UnsupportedPhase { index: usize },
    #[error("state has {got} velocity points, layout holds {expected}")]
    Layout { expected: usize, got: usize },
    #[error("probability {0} outside [0, 1]")]
    Probability(f64),
    #[error("iteration count must be at least 1")]
    Iterations,
    #[error("phase retrieval needs one extra qubit in the layout")]
    NoExtraQubit,
    #[error("target index {0} lies outside the state space or sets the extra qubit")]
    Target(usize),
    #[error("series is empty")]
    EmptySeries,
    #[error("fit window holds {found} extrema, need at least {needed}")]
    TooFewExtrema { found: usize, needed: usize },
    #[error("fit did not converge in {0} steps")]
    NoConvergence(usize),
}
