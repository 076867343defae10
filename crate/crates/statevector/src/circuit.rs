use crate::{Control, GateOp, StateError, StateVector};

/// Ordered gate list; the first gate is applied first.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Circuit {
    pub gates: Vec<GateOp>,
}

impl Circuit {
    pub fn new() -> Self {
        Circuit::default()
    }

    pub fn push(&mut self, gate: GateOp) {
        self.gates.push(gate);
    }

    pub fn extend(&mut self, other: &Circuit) {
        self.gates.extend(other.gates.iter().cloned());
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// Reversed order with every gate inverted.
    pub fn adjoint(&self) -> Circuit {
        Circuit {
            gates: self.gates.iter().rev().map(GateOp::adjoint).collect(),
        }
    }

    /// Adds the same controls to every gate.
    pub fn controlled(&self, controls: &[Control]) -> Circuit {
        Circuit {
            gates: self.gates.iter().map(|g| g.clone().with_controls(controls)).collect(),
        }
    }

    pub fn validate(&self, n_qubits: usize) -> Result<(), StateError> {
        self.gates.iter().try_for_each(|g| g.validate(n_qubits))
    }

    pub fn apply(&self, state: &mut StateVector) -> Result<(), StateError> {
        self.validate(state.n_qubits())?;
        self.apply_unchecked(state);
        Ok(())
    }

    /// Runs the gates on a raw amplitude slice (see [`crate::apply_to_amplitudes`]).
    pub fn apply_to_amplitudes(&self, amps: &mut [num_complex::Complex64]) {
        for g in &self.gates {
            crate::apply_to_amplitudes(amps, g);
        }
    }

    /// Skips validation; for hot loops over circuits already validated once.
    pub fn apply_unchecked(&self, state: &mut StateVector) {
        for g in &self.gates {
            state.apply_unchecked(g);
        }
    }
}

impl FromIterator<GateOp> for Circuit {
    fn from_iter<I: IntoIterator<Item = GateOp>>(iter: I) -> Self {
        Circuit {
            gates: iter.into_iter().collect(),
        }
    }
}
