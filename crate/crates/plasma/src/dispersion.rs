use std::f64::consts::{PI, SQRT_2};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::PlasmaError;

/// Complex frequency `ω − iγ` of the least-damped Langmuir mode.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DispersionRoot {
    pub k: f64,
    pub omega: f64,
    pub gamma: f64,
    pub residual: f64,
    pub iterations: usize,
}

const STEP: f64 = 0.25;
const MAX_TERMS: usize = 120;

/// Plasma dispersion function `Z(ζ)` with the Landau continuation into `Im ζ < 0`.
///
/// `Z` is entire and obeys `Z' = −2(1 + ζZ)`, `Z(0) = i√π`. We integrate that
/// ODE by Taylor steps of length ≤ 0.25 along the segment from the origin,
/// which needs no branch logic and keeps full precision off the real axis.
pub fn plasma_z(zeta: Complex64) -> Complex64 {
    let mut z = Complex64::new(0.0, 0.0);
    let mut val = Complex64::new(0.0, PI.sqrt());
    let steps = (zeta.norm() / STEP).ceil().max(1.0) as usize;
    let h = zeta / steps as f64;
    for _ in 0..steps {
        val = taylor_step(z, val, h);
        z += h;
    }
    val
}

fn taylor_step(z: Complex64, z_val: Complex64, h: Complex64) -> Complex64 {
    let mut prev = z_val;
    let mut cur = -2.0 * (1.0 + z * z_val);
    let mut hp = h;
    let mut sum = z_val + cur * hp;
    let mut small = 0;
    for n in 1..MAX_TERMS {
        let next = -2.0 * (prev + z * cur) / (n as f64 + 1.0);
        hp *= h;
        let term = next * hp;
        sum += term;
        if term.norm() <= 1e-18 * sum.norm().max(1e-300) {
            small += 1;
            if small == 3 {
                break;
            }
        } else {
            small = 0;
        }
        prev = cur;
        cur = next;
    }
    sum
}

/// `k² + 1 + ζ·Z(ζ)`; its zeros in `ζ = (ω − iγ)/(√2·k)` are the normal modes.
pub fn dispersion_function(zeta: Complex64, k: f64) -> Complex64 {
    k * k + 1.0 + zeta * plasma_z(zeta)
}

/// Bohm-Gross frequency and weak-damping Landau rate.
pub fn theory_estimates(k: f64) -> (f64, f64) {
    let omega = 1.0 + 1.5 * k * k;
    let gamma = (PI / 8.0).sqrt() * omega / k.powi(3) * (-omega * omega / (2.0 * k * k)).exp();
    (omega, gamma)
}

/// Newton iteration on the dispersion function, seeded at the Bohm-Gross estimate.
pub fn dispersion_solve(k: f64) -> Result<DispersionRoot, PlasmaError> {
    if !(k > 0.0) || !k.is_finite() {
        return Err(PlasmaError::Wavenumber(k));
    }
    const MAX_ITER: usize = 100;
    let (w0, g0) = theory_estimates(k);
    let scale = SQRT_2 * k;
    let mut zeta = Complex64::new(w0, -g0.min(w0)) / scale;
    let mut f = dispersion_function(zeta, k);
    for it in 1..=MAX_ITER {
        let zf = plasma_z(zeta);
        // d/dζ [ζZ] = Z + ζZ' = Z − 2ζ(1 + ζZ)
        let df = zf - 2.0 * zeta * (1.0 + zeta * zf);
        let mut step = f / df;
        // Keep steps modest so the iterate cannot jump to a distant branch.
        let cap = 0.5 * zeta.norm().max(0.5);
        if step.norm() > cap {
            step *= cap / step.norm();
        }
        zeta -= step;
        f = dispersion_function(zeta, k);
        if f.norm() <= 1e-13 || step.norm() <= 1e-15 * zeta.norm() {
            let residual = f.norm();
            if residual > 1e-10 {
                break;
            }
            return Ok(DispersionRoot {
                k,
                omega: scale * zeta.re,
                gamma: -scale * zeta.im,
                residual,
                iterations: it,
            });
        }
    }
    Err(PlasmaError::NoConvergence {
        iterations: MAX_ITER,
        last: zeta * scale,
        residual: f.norm(),
    })
}
