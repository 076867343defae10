//! Experiment harness behind the `vlasim` binary.

mod commands;
mod config;
mod error;

pub use commands::{
    circuit_series, cmd_dispersion, cmd_fit, cmd_readout_demo, cmd_simulate, cmd_sweep_error, cmd_verify_encoding,
    dispersion_rows, oracle_series, par_map, sweep_rows, DispersionRow, EncodingRow, ReadoutDemo, SimulateOutput,
    SweepRow, ENCODING_TOLERANCE,
};
pub use config::{ExperimentConfig, PathChoice, PhysicsConfig, RunKind};
pub use error::{CliError, FailureRecord};
