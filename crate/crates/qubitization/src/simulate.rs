//! The walk `W̃`, its controlled reflection `V`, and the circuit `Ĉ`.
//!
//! `W̃ = i·(X_q ⊗ I − 2·Π)·X_q·(|0⟩⟨0|_q ⊗ U + |1⟩⟨1|_q ⊗ U†)` restricted to the
//! `(q, a, s)` registers, where `Π` projects onto `a = 0`. Its eigenphases `θ`
//! satisfy `sin θ = −λ` for each eigenvalue `λ` of `β·H`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use vlasim_oracle::eigendecompose;
use vlasim_plasma::{build_hamiltonian, compute_encoding, ArrowheadHamiltonian, LandauConfig};
use vlasim_statevector::{Circuit, Control, GateOp, RegisterLayout, StateVector};

use crate::encoding::{query_qubits, BlockEncoding, DenseQuery};
use crate::schedule::{compute_phase_schedule, PhaseSchedule};
use crate::QubitizationError;

const SQRT_HALF: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// How the query `U` is realised.
#[derive(Debug, Clone)]
pub enum QueryPath {
    /// Gate-level `U = U_row†·U_col`.
    Circuit { u: Circuit, u_dag: Circuit },
    /// Dense Hermitian stand-in with the same top-left block.
    Dense(DenseQuery),
}

impl QueryPath {
    pub fn circuit(enc: &BlockEncoding) -> Self {
        let u = enc.u();
        QueryPath::Circuit {
            u_dag: u.adjoint(),
            u,
        }
    }

    fn apply(&self, amps: &mut [Complex64], adjoint: bool) {
        match self {
            QueryPath::Circuit { u, u_dag } => {
                if adjoint {
                    u_dag.apply_to_amplitudes(amps)
                } else {
                    u.apply_to_amplitudes(amps)
                }
            }
            QueryPath::Dense(d) => d.apply(amps),
        }
    }
}

/// Gate-level `W̃` controlled on `b = 1`, acting on the full register file.
pub fn build_walk(u: &Circuit, layout: &RegisterLayout) -> Circuit {
    let (q, b) = (layout.q(), layout.b());
    let on_b = Control::on(b);
    let a_zero: Vec<Control> = (0..4).map(|i| Control::off(layout.a(i))).collect();
    let mut c = Circuit::new();
    c.extend(&u.controlled(&[on_b, Control::off(q)]));
    c.extend(&u.adjoint().controlled(&[on_b, Control::on(q)]));
    c.push(GateOp::x(q).controlled(on_b));
    c.push(GateOp::hadamard(q).controlled(on_b));
    c.push(GateOp::x(q));
    c.push(GateOp::phase(q, std::f64::consts::PI).controlled(on_b).with_controls(&a_zero));
    c.push(GateOp::x(q));
    c.push(GateOp::hadamard(q).controlled(on_b));
    c.push(GateOp::phase(b, std::f64::consts::FRAC_PI_2));
    c
}

/// Gate-level `Ĉ` for a schedule. Intended for small registers and cross-checks.
pub fn build_c_hat(u: &Circuit, layout: &RegisterLayout, schedule: &PhaseSchedule) -> Circuit {
    let (q, b) = (layout.q(), layout.b());
    let mut v = Circuit::new();
    v.push(GateOp::hadamard(b));
    v.extend(&build_walk(u, layout));
    v.push(GateOp::hadamard(b));
    let v_dag = v.adjoint();

    let mut c = Circuit::new();
    c.push(GateOp::hadamard(b));
    c.push(GateOp::hadamard(q));
    for (vartheta, phi, theta) in schedule.angles() {
        c.push(GateOp::phase(b, vartheta));
        c.extend(&v);
        c.push(GateOp::phase(b, phi));
        c.extend(&v_dag);
        c.push(GateOp::phase(b, theta));
    }
    c.push(GateOp::hadamard(b));
    c.push(GateOp::hadamard(q));
    c
}

/// Applies `Ĉ` by slicing the state into `(b, q)` quarters, so each query runs
/// on a contiguous block of `2^{n_v+5}` amplitudes.
#[derive(Debug, Clone)]
pub struct CHatRunner {
    pub query: QueryPath,
    pub layout: RegisterLayout,
}

impl CHatRunner {
    pub fn new(query: QueryPath, layout: RegisterLayout) -> Self {
        CHatRunner { query, layout }
    }

    fn block(&self) -> usize {
        1 << query_qubits(&self.layout)
    }

    fn hadamard_pair(lo: &mut [Complex64], hi: &mut [Complex64]) {
        for (x, y) in lo.iter_mut().zip(hi.iter_mut()) {
            let (a, b) = (*x, *y);
            *x = (a + b) * SQRT_HALF;
            *y = (a - b) * SQRT_HALF;
        }
    }

    fn h_b(&self, amps: &mut [Complex64]) {
        let half = 2 * self.block();
        let (lo, hi) = amps.split_at_mut(half);
        Self::hadamard_pair(lo, hi);
    }

    fn h_q(&self, amps: &mut [Complex64]) {
        let d = self.block();
        for quarter in amps.chunks_mut(2 * d) {
            let (lo, hi) = quarter.split_at_mut(d);
            Self::hadamard_pair(lo, hi);
        }
    }

    fn phase_b(&self, amps: &mut [Complex64], angle: f64) {
        let e = Complex64::from_polar(1.0, angle);
        for z in &mut amps[2 * self.block()..] {
            *z *= e;
        }
    }

    /// `W̃` (or `W̃†`) on the `b = 1` half.
    fn walk(&self, half: &mut [Complex64], adjoint: bool) {
        let d = self.block();
        let a_mask = 0xF << self.layout.n_v;
        let (q0, q1) = half.split_at_mut(d);
        let reflect = |q0: &mut [Complex64], q1: &mut [Complex64]| {
            for i in (0..d).filter(|i| i & a_mask == 0) {
                let (x0, x1) = (q0[i], q1[i]);
                q0[i] = -x1;
                q1[i] = -x0;
            }
        };
        if !adjoint {
            self.query.apply(q0, false);
            self.query.apply(q1, true);
            q0.swap_with_slice(q1);
            reflect(q0, q1);
            let i = Complex64::i();
            half.iter_mut().for_each(|z| *z *= i);
        } else {
            let mi = -Complex64::i();
            half.iter_mut().for_each(|z| *z *= mi);
            let (q0, q1) = half.split_at_mut(d);
            reflect(q0, q1);
            q0.swap_with_slice(q1);
            self.query.apply(q0, true);
            self.query.apply(q1, false);
        }
    }

    fn v(&self, amps: &mut [Complex64], adjoint: bool) {
        self.h_b(amps);
        let half = 2 * self.block();
        self.walk(&mut amps[half..], adjoint);
        self.h_b(amps);
    }

    pub fn apply(&self, amps: &mut [Complex64], schedule: &PhaseSchedule) {
        assert_eq!(amps.len(), 4 * self.block(), "runner expects a register file without extras");
        self.h_b(amps);
        self.h_q(amps);
        for (vartheta, phi, theta) in schedule.angles() {
            self.phase_b(amps, vartheta);
            self.v(amps, false);
            self.phase_b(amps, phi);
            self.v(amps, true);
            self.phase_b(amps, theta);
        }
        self.h_b(amps);
        self.h_q(amps);
    }
}

/// Serializable headline numbers of a run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimulationSummary {
    pub query_count: usize,
    pub epsilon_bound: f64,
    pub epsilon_actual: f64,
    pub failure_probability: f64,
}

#[derive(Debug, Clone)]
pub struct SimulationReport {
    pub schedule: PhaseSchedule,
    pub final_state: StateVector,
    /// Good-subspace amplitudes on the data indices `0..=N_v`.
    pub output: Vec<Complex64>,
    /// `e^{−iHt}·x` on the same indices.
    pub exact: Vec<Complex64>,
    pub summary: SimulationSummary,
}

fn layout_for(h: &ArrowheadHamiltonian) -> Result<RegisterLayout, QubitizationError> {
    let n = h.n_v();
    if !n.is_power_of_two() || n < 2 {
        return Err(QubitizationError::Layout {
            grid: n,
            register: n.next_power_of_two(),
        });
    }
    Ok(RegisterLayout::new(n.trailing_zeros() as usize))
}

/// Runs `Ĉ` on `input` with a fresh schedule and the gate-level query.
pub fn run_simulation(cfg: &LandauConfig, input: &StateVector) -> Result<SimulationReport, QubitizationError> {
    let h = build_hamiltonian(cfg)?;
    let enc = compute_encoding(cfg)?;
    let layout = layout_for(&h)?;
    let schedule = compute_phase_schedule(cfg.t / enc.beta, cfg.epsilon)?;
    let be = BlockEncoding::new(&enc, layout)?;
    run_simulation_with(cfg, input, &QueryPath::circuit(&be), &schedule)
}

/// Runs `Ĉ` with an explicit query realisation and schedule.
pub fn run_simulation_with(
    cfg: &LandauConfig,
    input: &StateVector,
    query: &QueryPath,
    schedule: &PhaseSchedule,
) -> Result<SimulationReport, QubitizationError> {
    let h = build_hamiltonian(cfg)?;
    let layout = layout_for(&h)?;
    if input.layout != layout {
        return Err(QubitizationError::InputDimension {
            expected: layout.dim(),
            got: input.amplitudes.len(),
        });
    }
    let n = h.n_v();
    let leak: f64 = input
        .amplitudes
        .iter()
        .enumerate()
        .filter(|(i, _)| !layout.is_good(*i) || layout.s_index(*i) > n)
        .map(|(_, z)| z.norm_sqr())
        .sum::<f64>()
        .sqrt();
    if leak > 1e-12 {
        return Err(QubitizationError::InputNotGood { leak });
    }
    let x: Vec<Complex64> = input.good_data()[..=n].to_vec();
    let exact = eigendecompose(&h)?.evolve(&x, cfg.t)?;

    let runner = CHatRunner::new(query.clone(), layout);
    let mut state = input.clone();
    runner.apply(&mut state.amplitudes, schedule);

    let output: Vec<Complex64> = state.good_data()[..=n].to_vec();
    let epsilon_actual = output
        .iter()
        .zip(&exact)
        .map(|(a, b)| (a - b).norm_sqr())
        .sum::<f64>()
        .sqrt();
    let failure_probability = (input.norm().powi(2) - state.good_probability()).max(0.0);
    Ok(SimulationReport {
        summary: SimulationSummary {
            query_count: schedule.query_count(),
            epsilon_bound: schedule.bound(),
            epsilon_actual,
            failure_probability,
        },
        schedule: schedule.clone(),
        final_state: state,
        output,
        exact,
    })
}
