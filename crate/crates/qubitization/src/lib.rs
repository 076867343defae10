//! Qubitized simulation of the arrowhead Hamiltonian.
//!
//! The pipeline: block-encode `β·H` with [`BlockEncoding`], build the walk,
//! compute a phase schedule approximating `e^{i t' sin θ}` and run the
//! resulting circuit `Ĉ` on a state vector.

mod bessel;
mod encoding;
mod error;
mod phases;
mod schedule;
mod simulate;

pub use bessel::{bessel_j, bessel_j_all};
pub use encoding::{
    build_u_col, build_u_row, circuit_matrix, extract_block, query_qubits, verify_encoding, BlockEncoding,
    DenseQuery, EncodingCheck,
};
pub use error::QubitizationError;
pub use phases::{layer_matrix, readout_polynomial, readout_sup_error};
pub use schedule::{choose_n, compute_phase_schedule, error_bound, query_bound, PhaseSchedule};
pub use simulate::{
    build_c_hat, build_walk, run_simulation, run_simulation_with, CHatRunner, QueryPath, SimulationReport,
    SimulationSummary,
};
