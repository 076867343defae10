//! `U = U_row†·U_col` with `⟨0|_a⟨j|_s U |0⟩_a|k⟩_s = β·H_jk`.
//!
//! Ancilla roles (one valid wiring; only the overlap contract matters):
//!
//! * `a0` carries `R(c)` for columns and flags the field row,
//! * `a1` carries `R(d_j)` for columns, `R(c)` for rows and flags the field column,
//! * `a2` carries `R(d̄_j)` for rows,
//! * `a3` carries `R(b_j)` / `R(b̄_j)` on the border branch.
//!
//! The field index `N_v` (r = 1, v = 0) is spread uniformly over `v` by
//! Hadamards, landing on `r = 1` for columns and `r = 0` for rows so the two
//! field states are orthogonal. Unused inputs pass through untouched, which
//! makes the residual block the identity on the unused subspace.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use vlasim_plasma::{ArrowheadHamiltonian, EncodingParams};
use vlasim_statevector::{Circuit, Control, GateOp, RegisterLayout};

use crate::QubitizationError;

#[derive(Debug, Clone)]
pub struct BlockEncoding {
    pub u_col: Circuit,
    pub u_row: Circuit,
    pub beta: f64,
    pub layout: RegisterLayout,
}

fn v_is_zero(layout: &RegisterLayout) -> Vec<Control> {
    layout.v_qubits().into_iter().map(Control::off).collect()
}

pub fn build_u_col(enc: &EncodingParams, layout: &RegisterLayout) -> Result<Circuit, QubitizationError> {
    check_size(enc, layout)?;
    let (a0, a1, a3, r) = (layout.a(0), layout.a(1), layout.a(3), layout.r());
    let nv = layout.n_v;
    let mut c = Circuit::new();
    // Field column: flag on a1, then uniform over v.
    c.push(GateOp::x(a1).controlled(Control::on(r)).with_controls(&v_is_zero(layout)));
    for q in layout.v_qubits() {
        c.push(GateOp::hadamard(q).with_controls(&[Control::on(r), Control::on(a1)]));
    }
    // Velocity columns.
    c.push(GateOp::rotation(a0, Complex64::new(enc.c(), 0.0))?.controlled(Control::off(r)));
    c.push(GateOp::variable_rotation(a1, enc.d.clone(), nv)?.controlled(Control::off(r)));
    c.push(GateOp::variable_rotation(a3, enc.b.clone(), nv)?.with_controls(&[Control::off(r), Control::on(a0)]));
    Ok(c)
}

pub fn build_u_row(enc: &EncodingParams, layout: &RegisterLayout) -> Result<Circuit, QubitizationError> {
    check_size(enc, layout)?;
    let (a0, a1, a2, a3, r) = (layout.a(0), layout.a(1), layout.a(2), layout.a(3), layout.r());
    let nv = layout.n_v;
    let conj = |t: &[Complex64]| t.iter().map(|z| z.conj()).collect::<Vec<_>>();
    let mut c = Circuit::new();
    // Field row: flag on a0, move to r = 0, uniform over v.
    c.push(GateOp::x(a0).controlled(Control::on(r)).with_controls(&v_is_zero(layout)));
    c.push(GateOp::x(r).controlled(Control::on(a0)));
    for q in layout.v_qubits() {
        c.push(GateOp::hadamard(q).controlled(Control::on(a0)));
    }
    // Velocity rows; the border branch (a1 = 1) is moved to r = 1.
    let rows = [Control::off(r), Control::off(a0)];
    c.push(GateOp::rotation(a1, Complex64::new(enc.c(), 0.0))?.with_controls(&rows));
    c.push(GateOp::variable_rotation(a2, conj(&enc.d), nv)?.with_controls(&rows));
    c.push(GateOp::variable_rotation(a3, conj(&enc.b), nv)?.with_controls(&rows).controlled(Control::on(a1)));
    c.push(GateOp::x(r).with_controls(&[Control::off(a0), Control::on(a1)]));
    Ok(c)
}

fn check_size(enc: &EncodingParams, layout: &RegisterLayout) -> Result<(), QubitizationError> {
    if enc.d.len() != layout.n_points() {
        return Err(QubitizationError::Layout {
            grid: enc.d.len(),
            register: layout.n_points(),
        });
    }
    Ok(())
}

impl BlockEncoding {
    pub fn new(enc: &EncodingParams, layout: RegisterLayout) -> Result<Self, QubitizationError> {
        Ok(BlockEncoding {
            u_col: build_u_col(enc, &layout)?,
            u_row: build_u_row(enc, &layout)?,
            beta: enc.beta,
            layout,
        })
    }

    /// `U_col` followed by `U_row†`.
    pub fn u(&self) -> Circuit {
        let mut c = self.u_col.clone();
        c.extend(&self.u_row.adjoint());
        c
    }
}

/// Number of qubits in the `a + s` part of the register file.
pub fn query_qubits(layout: &RegisterLayout) -> usize {
    layout.n_v + 5
}

/// Top-left `2N_v × 2N_v` block `⟨0|_a U |0⟩_a` of a circuit acting on `a + s`.
pub fn extract_block(u: &Circuit, layout: &RegisterLayout) -> DMatrix<Complex64> {
    let dim = 1usize << query_qubits(layout);
    let ns = 2 * layout.n_points();
    let mut out = DMatrix::zeros(ns, ns);
    for k in 0..ns {
        let mut amps = vec![Complex64::new(0.0, 0.0); dim];
        amps[layout.good_index(k)] = Complex64::new(1.0, 0.0);
        u.apply_to_amplitudes(&mut amps);
        for j in 0..ns {
            out[(j, k)] = amps[layout.good_index(j)];
        }
    }
    out
}

/// Full matrix of a circuit acting on `a + s`.
pub fn circuit_matrix(u: &Circuit, layout: &RegisterLayout) -> DMatrix<Complex64> {
    let dim = 1usize << query_qubits(layout);
    let mut out = DMatrix::zeros(dim, dim);
    for k in 0..dim {
        let mut amps = vec![Complex64::new(0.0, 0.0); dim];
        amps[k] = Complex64::new(1.0, 0.0);
        u.apply_to_amplitudes(&mut amps);
        out.set_column(k, &nalgebra::DVector::from_vec(amps));
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EncodingCheck {
    /// `max_{j,k ≤ N_v} |⟨0,j|U|0,k⟩ − β·H_jk|`
    pub max_deviation: f64,
    /// Largest coupling between used indices `≤ N_v` and unused ones.
    pub unused_coupling: f64,
}

impl EncodingCheck {
    pub fn passes(&self, tol: f64) -> bool {
        self.max_deviation <= tol && self.unused_coupling <= tol
    }
}

pub fn verify_encoding(u: &Circuit, h: &ArrowheadHamiltonian, beta: f64, layout: &RegisterLayout) -> EncodingCheck {
    let block = extract_block(u, layout);
    let n = h.n_v();
    let ns = 2 * layout.n_points();
    let mut max_deviation = 0.0_f64;
    let mut unused_coupling = 0.0_f64;
    for j in 0..ns {
        for k in 0..ns {
            let z = block[(j, k)];
            match (j <= n, k <= n) {
                (true, true) => max_deviation = max_deviation.max((z - beta * h.entry(j, k)).norm()),
                (false, false) => {}
                _ => unused_coupling = unused_coupling.max(z.norm()),
            }
        }
    }
    EncodingCheck {
        max_deviation,
        unused_coupling,
    }
}

/// Dense stand-in for `U`: `[[A, S], [S, −A]]` on `a0`, with `A = β·H ⊕ I`
/// and `S = sqrt(I − A²)`. Hermitian, so it is its own inverse.
#[derive(Debug, Clone)]
pub struct DenseQuery {
    pub a: DMatrix<f64>,
    pub s: DMatrix<f64>,
    pub layout: RegisterLayout,
}

impl DenseQuery {
    pub fn new(h: &ArrowheadHamiltonian, beta: f64, layout: RegisterLayout) -> Result<Self, QubitizationError> {
        let ns = 2 * layout.n_points();
        if h.n_v() != layout.n_points() {
            return Err(QubitizationError::Layout {
                grid: h.n_v(),
                register: layout.n_points(),
            });
        }
        let n = h.n_v();
        let a = DMatrix::from_fn(ns, ns, |j, k| match (j <= n, k <= n) {
            (true, true) => beta * h.entry(j, k),
            (false, false) if j == k => 1.0,
            _ => 0.0,
        });
        let eig = SymmetricEigen::new(a.clone());
        let sq = eig.eigenvalues.map(|l| (1.0 - l * l).max(0.0).sqrt());
        let s = &eig.eigenvectors * DMatrix::from_diagonal(&sq) * eig.eigenvectors.transpose();
        Ok(DenseQuery { a, s, layout })
    }

    /// Applies the query to the `a + s` amplitudes of one `(b, q)` sector.
    pub fn apply(&self, amps: &mut [Complex64]) {
        let l = &self.layout;
        let ns = 2 * l.n_points();
        let idx = |a: usize, s: usize| (s / l.n_points()) << l.r() | a << l.n_v | (s % l.n_points());
        let mut x0 = vec![Complex64::new(0.0, 0.0); ns];
        let mut x1 = x0.clone();
        for rest in 0..8 {
            let (a_lo, a_hi) = (rest << 1, rest << 1 | 1);
            for s in 0..ns {
                x0[s] = amps[idx(a_lo, s)];
                x1[s] = amps[idx(a_hi, s)];
            }
            for j in 0..ns {
                let mut y0 = Complex64::new(0.0, 0.0);
                let mut y1 = Complex64::new(0.0, 0.0);
                for k in 0..ns {
                    let (a, s) = (self.a[(j, k)], self.s[(j, k)]);
                    y0 += x0[k] * a + x1[k] * s;
                    y1 += x0[k] * s - x1[k] * a;
                }
                amps[idx(a_lo, j)] = y0;
                amps[idx(a_hi, j)] = y1;
            }
        }
    }
}
