//! Repeat-until-success preparation of `η·(F̃′, Ẽ)`.
//!
//! `r` is split first so the field branch carries the right weight, then the
//! velocity branch is loaded as a uniform superposition times `h_j = F̃′_j/max|F̃′|`
//! on flag `a0`. The field branch gets the flat amplitude `h_E = sqrt(⟨|h|²⟩)`
//! so that both branches succeed with the same probability `⟨|h|²⟩`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use vlasim_plasma::InitialState;
use vlasim_statevector::{Circuit, Control, GateOp, RegisterLayout, StateVector};

use crate::ReadoutError;

#[derive(Debug, Clone)]
pub struct PrepReport {
    /// Normalised success branch.
    pub prepared_state: StateVector,
    /// State before the flag measurement.
    pub pre_measurement: StateVector,
    pub success_probability: f64,
    pub expected_repetitions: f64,
    /// `⟨|h_j|²⟩` computed directly from the rotation table.
    pub predicted_probability: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PrepSummary {
    pub success_probability: f64,
    pub expected_repetitions: f64,
    pub predicted_probability: f64,
}

impl PrepReport {
    pub fn summary(&self) -> PrepSummary {
        PrepSummary {
            success_probability: self.success_probability,
            expected_repetitions: self.expected_repetitions,
            predicted_probability: self.predicted_probability,
        }
    }
}

fn loadable(z: Complex64) -> bool {
    z.im.abs() <= 1e-14 * z.norm() || z.re.abs() <= 1e-14 * z.norm()
}

fn snap(z: Complex64) -> Complex64 {
    if z.im.abs() <= 1e-14 * z.norm() {
        Complex64::new(z.re, 0.0)
    } else {
        Complex64::new(0.0, z.im)
    }
}

/// Circuit preparing the pre-measurement state from `|0⟩`, and `⟨|h|²⟩`.
pub fn prep_circuit(x0: &InitialState, layout: &RegisterLayout) -> Result<(Circuit, f64), ReadoutError> {
    let n = layout.n_points();
    if x0.f_prime.len() != n {
        return Err(ReadoutError::Layout {
            expected: n,
            got: x0.f_prime.len(),
        });
    }
    let m = x0.f_prime.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if !(m > 0.0) {
        return Err(ReadoutError::ZeroInput);
    }
    let mut h = Vec::with_capacity(n);
    for (j, &f) in x0.f_prime.iter().enumerate() {
        if !loadable(f) {
            return Err(ReadoutError::UnsupportedPhase { index: j });
        }
        h.push(snap(f / m));
    }
    let mean_h2 = h.iter().map(|z| z.norm_sqr()).sum::<f64>() / n as f64;
    let h_e = mean_h2.sqrt().min(1.0);
    let e = x0.e_field;
    let a = (1.0 + e.norm_sqr() / (n as f64 * m * m * mean_h2)).sqrt().recip();

    let (a0, r) = (layout.a(0), layout.r());
    let mut c = Circuit::new();
    c.push(GateOp::rotation(r, Complex64::new(a, 0.0))?);
    for q in layout.v_qubits() {
        c.push(GateOp::hadamard(q).controlled(Control::off(r)));
    }
    c.push(GateOp::variable_rotation(a0, h, layout.n_v)?.controlled(Control::off(r)));
    c.push(GateOp::rotation(a0, Complex64::new(h_e, 0.0))?.controlled(Control::on(r)));
    if e.norm() > 0.0 {
        c.push(GateOp::phase(r, e.arg()));
    }
    Ok((c, mean_h2))
}

pub fn prepare_state(x0: &InitialState, layout: &RegisterLayout) -> Result<PrepReport, ReadoutError> {
    let (circuit, predicted) = prep_circuit(x0, layout)?;
    let mut pre = StateVector::zero(*layout);
    circuit.apply(&mut pre)?;
    let p = pre.good_probability();
    let mut post = pre.clone();
    let scale = p.sqrt().recip();
    for (i, z) in post.amplitudes.iter_mut().enumerate() {
        *z = if layout.is_good(i) { *z * scale } else { Complex64::new(0.0, 0.0) };
    }
    Ok(PrepReport {
        prepared_state: post,
        pre_measurement: pre,
        success_probability: p,
        expected_repetitions: 1.0 / p,
        predicted_probability: predicted,
    })
}
