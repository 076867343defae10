//! Dense complex statevector over the registers `b, q, r, a(4), v(n_v)`.
//!
//! Basis index layout, most to least significant: extra qubits (if any),
//! then `b`, `q`, `r`, `a`, `v`. Each register is little-endian, so the `v`
//! register value is the low `n_v` bits and the data index `s = r·N_v + v`.

mod circuit;
mod error;
mod gate;
mod layout;
mod state;

pub use circuit::Circuit;
pub use error::StateError;
pub use gate::{rotation_matrix, Control, GateKind, GateOp, Mat2};
pub use layout::{Register, RegisterLayout, Registers};
pub use state::{apply_to_amplitudes, StateVector};

pub use num_complex::Complex64;
