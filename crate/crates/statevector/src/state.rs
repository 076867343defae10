use std::io::{self, Write};

use num_complex::Complex64;

use crate::{GateKind, GateOp, RegisterLayout, StateError};

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    pub layout: RegisterLayout,
    pub amplitudes: Vec<Complex64>,
}

impl StateVector {
    /// All qubits in `|0⟩`.
    pub fn zero(layout: RegisterLayout) -> Self {
        Self::basis(layout, 0)
    }

    pub fn basis(layout: RegisterLayout, index: usize) -> Self {
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); layout.dim()];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        StateVector { layout, amplitudes }
    }

    pub fn from_amplitudes(layout: RegisterLayout, amplitudes: Vec<Complex64>) -> Result<Self, StateError> {
        if amplitudes.len() != layout.dim() {
            return Err(StateError::Dimension {
                expected: layout.dim(),
                got: amplitudes.len(),
            });
        }
        Ok(StateVector { layout, amplitudes })
    }

    /// Embeds a data-register vector (indexed by `s`) with every ancilla at zero.
    pub fn from_data(layout: RegisterLayout, data: &[Complex64]) -> Result<Self, StateError> {
        if data.len() > 2 * layout.n_points() {
            return Err(StateError::Dimension {
                expected: 2 * layout.n_points(),
                got: data.len(),
            });
        }
        let mut st = StateVector {
            layout,
            amplitudes: vec![Complex64::new(0.0, 0.0); layout.dim()],
        };
        for (s, &z) in data.iter().enumerate() {
            st.amplitudes[layout.good_index(s)] = z;
        }
        Ok(st)
    }

    pub fn n_qubits(&self) -> usize {
        self.layout.n_qubits()
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn apply_gate(&mut self, gate: &GateOp) -> Result<(), StateError> {
        gate.validate(self.n_qubits())?;
        self.apply_unchecked(gate);
        Ok(())
    }

    pub(crate) fn apply_unchecked(&mut self, gate: &GateOp) {
        apply_to_amplitudes(&mut self.amplitudes, gate);
    }

    /// Total probability of basis states accepted by `predicate`.
    pub fn subspace_probability<F: Fn(usize) -> bool>(&self, predicate: F) -> f64 {
        self.amplitudes
            .iter()
            .enumerate()
            .filter(|(i, _)| predicate(*i))
            .map(|(_, z)| z.norm_sqr())
            .sum()
    }

    /// Probability that every ancilla (and extra qubit) reads zero.
    pub fn good_probability(&self) -> f64 {
        let l = self.layout;
        self.subspace_probability(|i| l.is_good(i))
    }

    /// Good-subspace amplitudes indexed by the data index `s`, length `2·N_v`.
    pub fn good_data(&self) -> Vec<Complex64> {
        (0..2 * self.layout.n_points())
            .map(|s| self.amplitudes[self.layout.good_index(s)])
            .collect()
    }

    pub fn inner(&self, other: &StateVector) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Debug dump with columns `index,extra,b,q,r,a,v,re,im`.
    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "index,extra,b,q,r,a,v,re,im")?;
        for (i, z) in self.amplitudes.iter().enumerate() {
            let r = self.layout.decompose(i);
            writeln!(w, "{i},{},{},{},{},{},{},{:e},{:e}", r.extra, r.b, r.q, r.r, r.a, r.v, z.re, z.im)?;
        }
        Ok(())
    }
}

/// Applies `gate` to a raw amplitude slice whose length is a power of two.
///
/// Qubit positions are bit positions of the slice index; no validation is done.
pub fn apply_to_amplitudes(amps: &mut [Complex64], gate: &GateOp) {
    let t = 1usize << gate.target;
    let (cmask, cval) = gate.control_pattern();
    let dim = amps.len();
    match &gate.kind {
        GateKind::PhaseShift(p) => {
            let ph = Complex64::from_polar(1.0, *p);
            let (m, v) = (cmask | t, cval | t);
            for (i, a) in amps.iter_mut().enumerate() {
                if i & m == v {
                    *a *= ph;
                }
            }
        }
        GateKind::PauliX => {
            for i in 0..dim {
                if i & t == 0 && i & cmask == cval {
                    amps.swap(i, i | t);
                }
            }
        }
        GateKind::VariableRotation { index_bits, .. } => {
            let mats = gate.matrices();
            let vmask = (1usize << index_bits) - 1;
            for i in 0..dim {
                if i & t == 0 && i & cmask == cval {
                    let m = &mats[i & vmask];
                    let j = i | t;
                    let (x0, x1) = (amps[i], amps[j]);
                    amps[i] = m[0][0] * x0 + m[0][1] * x1;
                    amps[j] = m[1][0] * x0 + m[1][1] * x1;
                }
            }
        }
        _ => {
            let m = gate.matrices()[0];
            for i in 0..dim {
                if i & t == 0 && i & cmask == cval {
                    let j = i | t;
                    let (x0, x1) = (amps[i], amps[j]);
                    amps[i] = m[0][0] * x0 + m[0][1] * x1;
                    amps[j] = m[1][0] * x0 + m[1][1] * x1;
                }
            }
        }
    }
}
