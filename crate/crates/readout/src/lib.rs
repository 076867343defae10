//! The algorithm's input and output boundary.

mod amplitude;
mod error;
mod fit;
mod phase;
mod prep;

pub use amplitude::{ae_error_bound, sampling_comparator, AmplitudeEstimate};
pub use error::ReadoutError;
pub use fit::{e_rms, find_extrema, fit_damped_sinusoid, FitResult, DEFAULT_WINDOW};
pub use phase::{
    phase_retrieval, reconstruct_nu, retrieval_amplitude, ComplexReadout, IMAG_NOISE_FACTOR, MODULUS_NOISE_FACTOR,
    REAL_NOISE_FACTOR, ZETAS,
};
pub use prep::{prep_circuit, prepare_state, PrepReport, PrepSummary};
