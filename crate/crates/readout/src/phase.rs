//! Complex amplitude from three magnitudes `d_ζ = |ν + e^{iζ}|/2`, `ζ ∈ {0, ±2π/3}`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use vlasim_statevector::{Circuit, Control, GateOp, RegisterLayout, StateVector};

use crate::ReadoutError;

pub const ZETAS: [f64; 3] = [0.0, 2.0 * std::f64::consts::FRAC_PI_3, -2.0 * std::f64::consts::FRAC_PI_3];

/// Real-part error per unit noise on each squared magnitude: `8/3`.
pub const REAL_NOISE_FACTOR: f64 = 8.0 / 3.0;
/// Imaginary-part error per unit noise: `4/√3`.
pub const IMAG_NOISE_FACTOR: f64 = 2.309_401_076_758_503;
/// Modulus of the worst-case error per unit noise: `sqrt((8/3)² + 16/3)`.
pub const MODULUS_NOISE_FACTOR: f64 = 3.527_668_414_752_787;

/// `ν = (2/3)(2d₀² − d₊² − d₋²) + i(2/√3)(d₊² − d₋²)`. Not clamped to the unit disk.
pub fn reconstruct_nu(d0: f64, d_plus: f64, d_minus: f64) -> Complex64 {
    let (a, p, m) = (d0 * d0, d_plus * d_plus, d_minus * d_minus);
    Complex64::new(2.0 / 3.0 * (2.0 * a - p - m), 2.0 / 3f64.sqrt() * (p - m))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexReadout {
    pub d0: f64,
    pub d_plus: f64,
    pub d_minus: f64,
    pub nu: Complex64,
}

impl ComplexReadout {
    pub fn from_magnitudes(d0: f64, d_plus: f64, d_minus: f64) -> Self {
        ComplexReadout {
            d0,
            d_plus,
            d_minus,
            nu: reconstruct_nu(d0, d_plus, d_minus),
        }
    }

    /// Magnitudes an ideal measurement of `ν` would give.
    pub fn forward(nu: Complex64) -> Self {
        let d = |z: f64| (nu + Complex64::from_polar(1.0, z)).norm() / 2.0;
        ComplexReadout {
            d0: d(ZETAS[0]),
            d_plus: d(ZETAS[1]),
            d_minus: d(ZETAS[2]),
            nu,
        }
    }
}

/// Amplitude on `|0⟩_c ⊗ |target⟩` after `H_c`, then `A` on `c = 0`, the
/// target bit pattern loaded on `c = 1`, a phase `ζ` on `c = 1` and `H_c`,
/// all applied to `|0⟩`. Equals `(ν + e^{iζ})/2` with `ν = ⟨target|A|0⟩`.
pub fn retrieval_amplitude(
    run: &Circuit,
    layout: &RegisterLayout,
    target: usize,
    zeta: f64,
) -> Result<Complex64, ReadoutError> {
    if layout.n_extra == 0 {
        return Err(ReadoutError::NoExtraQubit);
    }
    let c = layout.extra(0);
    if target >= layout.dim() || target >> c & 1 == 1 {
        return Err(ReadoutError::Target(target));
    }
    let mut ext = Circuit::new();
    ext.push(GateOp::hadamard(c));
    ext.extend(&run.controlled(&[Control::off(c)]));
    for q in (0..c).filter(|q| target >> q & 1 == 1) {
        ext.push(GateOp::x(q).controlled(Control::on(c)));
    }
    ext.push(GateOp::phase(c, zeta));
    ext.push(GateOp::hadamard(c));
    let mut st = StateVector::zero(*layout);
    ext.apply(&mut st)?;
    Ok(st.amplitudes[target])
}

/// `|(ν + e^{iζ})/2|` measured on the statevector.
pub fn phase_retrieval(run: &Circuit, layout: &RegisterLayout, target: usize, zeta: f64) -> Result<f64, ReadoutError> {
    Ok(retrieval_amplitude(run, layout, target, zeta)?.norm())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert!((reconstruct_nu(1.0, 0.5, 0.5) - 1.0).norm() < 1e-15);
        assert!(reconstruct_nu(0.5, 0.5, 0.5).norm() < 1e-15);
        let r = ComplexReadout::forward(Complex64::i());
        assert!((r.d0 - 0.5f64.sqrt()).abs() < 1e-15);
        assert!((r.d_plus - 0.965_925_826_289_068_3).abs() < 1e-12);
        assert!((r.d_minus - 0.258_819_045_102_520_8).abs() < 1e-12);
        assert!((reconstruct_nu(r.d0, r.d_plus, r.d_minus) - Complex64::i()).norm() < 1e-14);
    }

    #[test]
    fn noise_constants() {
        assert!((IMAG_NOISE_FACTOR - 4.0 / 3f64.sqrt()).abs() < 1e-15);
        assert!((MODULUS_NOISE_FACTOR - (REAL_NOISE_FACTOR.powi(2) + IMAG_NOISE_FACTOR.powi(2)).sqrt()).abs() < 1e-15);
    }
}
