//! Discretized one-dimensional electrostatic Vlasov problem.
//!
//! All quantities are dimensionless: lengths in Debye lengths, times in
//! inverse plasma frequencies, speeds in thermal units.

mod background;
mod config;
mod dispersion;
mod encoding;
mod error;
mod grid;
mod hamiltonian;
mod initial;

pub use background::{BackgroundDistribution, BackgroundKind};
pub use config::LandauConfig;
pub use dispersion::{dispersion_function, dispersion_solve, plasma_z, theory_estimates, DispersionRoot};
pub use encoding::{compute_encoding, EncodingParams};
pub use error::PlasmaError;
pub use grid::{build_grid, VelocityGrid};
pub use hamiltonian::{build_hamiltonian, ArrowheadHamiltonian};
pub use initial::{initial_state, initial_state_from, InitialState};

pub use num_complex::Complex64;
