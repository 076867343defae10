use serde::Serialize;
use thiserror::Error;
use vlasim_oracle::OracleError;
use vlasim_plasma::PlasmaError;
use vlasim_qubitization::QubitizationError;
use vlasim_readout::ReadoutError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("config: {0}")]
    Config(String),
    #[error("invariant breach: {0}")]
    Invariant(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
}

#[derive(Debug, Serialize)]
pub struct FailureRecord<'a> {
    pub exit_code: i32,
    pub kind: &'a str,
    pub message: String,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Invariant(_) => 3,
            CliError::Numerical(_) => 4,
        }
    }

    pub fn record(&self) -> FailureRecord<'static> {
        let kind = match self {
            CliError::Config(_) => "config",
            CliError::Invariant(_) => "invariant",
            CliError::Numerical(_) => "numerical",
        };
        FailureRecord {
            exit_code: self.exit_code(),
            kind,
            message: self.to_string(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Config(format!("io: {e}"))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Config(e.to_string())
    }
}

impl From<PlasmaError> for CliError {
    fn from(e: PlasmaError) -> Self {
        match e {
            PlasmaError::NoConvergence { .. } => CliError::Numerical(e.to_string()),
            _ => CliError::Config(e.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::Parse { .. } | OracleError::Io(_) | OracleError::Times(_) => CliError::Config(e.to_string()),
            _ => CliError::Numerical(e.to_string()),
        }
    }
}

impl From<QubitizationError> for CliError {
    fn from(e: QubitizationError) -> Self {
        match e {
            QubitizationError::Plasma(p) => p.into(),
            QubitizationError::Oracle(o) => o.into(),
            QubitizationError::Json(j) => j.into(),
            QubitizationError::Completion { .. } | QubitizationError::TooManyPhases { .. } => {
                CliError::Numerical(e.to_string())
            }
            _ => CliError::Invariant(e.to_string()),
        }
    }
}

impl From<ReadoutError> for CliError {
    fn from(e: ReadoutError) -> Self {
        match e {
            ReadoutError::TooFewExtrema { .. } | ReadoutError::NoConvergence(_) => CliError::Numerical(e.to_string()),
            ReadoutError::Probability(_) | ReadoutError::Iterations | ReadoutError::EmptySeries => {
                CliError::Config(e.to_string())
            }
            _ => CliError::Invariant(e.to_string()),
        }
    }
}
