use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum StateError {
    #[error("qubit {qubit} is outside a {n_qubits}-qubit register file")]
    QubitOutOfRange { qubit: usize, n_qubits: usize },
    #[error("qubit {0} is used both as target and control")]
    ControlOnTarget(usize),
    #[error("rotation argument {0} has modulus above one")]
    RotationModulus(num_complex::Complex64),
    #[error("rotation argument {0} is neither purely real nor purely imaginary")]
    RotationPhase(num_complex::Complex64),
    #[error("variable rotation table has {got} entries, expected {expected}")]
    TableLength { expected: usize, got: usize },
    #[error("variable rotation targets qubit {0} inside its own index register")]
    TargetInIndex(usize),
    #[error("gate matrix deviates from unitarity by {0:e}")]
    NotUnitary(f64),
    #[error("amplitude vector has length {got}, expected {expected}")]
    Dimension { expected: usize, got: usize },
}
