use serde::{Deserialize, Serialize};

use crate::phases::{phases_for, readout_sup_error};
use crate::QubitizationError;

/// Hard cap on the truncation order, far above anything the reference case needs.
pub const MAX_ORDER: usize = 20_000;

fn ln_factorial(n: usize) -> f64 {
    (2..=n).map(|k| (k as f64).ln()).sum()
}

/// Truncation error bound `b(n) = 32 (t'/2)^n / n!`, evaluated in log form.
pub fn error_bound(t_prime: f64, n: usize) -> f64 {
    if t_prime == 0.0 {
        return 0.0;
    }
    (32f64.ln() + n as f64 * (0.5 * t_prime).ln() - ln_factorial(n)).exp()
}

/// Smallest `n ≥ 1` with `b(n) ≤ ε`.
pub fn choose_n(t_prime: f64, epsilon: f64) -> Result<usize, QubitizationError> {
    if t_prime == 0.0 {
        return Ok(1);
    }
    let target = epsilon.ln();
    let mut log_b = 32f64.ln();
    let half = (0.5 * t_prime).ln();
    for n in 1..=MAX_ORDER {
        log_b += half - (n as f64).ln();
        if log_b <= target {
            return Ok(n);
        }
    }
    Err(QubitizationError::TooManyPhases {
        needed: MAX_ORDER + 1,
        cap: MAX_ORDER,
    })
}

/// `⌈2e·t' + 4 ln(1/ε) + 6⌉`
pub fn query_bound(t_prime: f64, epsilon: f64) -> usize {
    (2.0 * std::f64::consts::E * t_prime + 4.0 * (1.0 / epsilon).ln() + 6.0).ceil() as usize
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PhaseSchedule {
    pub n: usize,
    pub t_prime: f64,
    pub epsilon: f64,
    /// `φ_0, …, φ_{L−1}` with `L = 2(n − 1)`.
    pub phi: Vec<f64>,
    /// Measured sup error of the readout against `e^{i t' sin θ}`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub achieved_error: Option<f64>,
}

impl PhaseSchedule {
    pub fn layers(&self) -> usize {
        self.phi.len()
    }

    /// Queries to `U` or `U†`: two per layer.
    pub fn query_count(&self) -> usize {
        2 * self.phi.len()
    }

    pub fn bound(&self) -> f64 {
        error_bound(self.t_prime, self.n)
    }

    /// Rotation angles `(ϑ_z, φ_z, θ_z)` for `z = 1..=L/2`.
    pub fn angles(&self) -> Vec<(f64, f64, f64)> {
        self.phi
            .chunks(2)
            .map(|p| {
                let vartheta = -p[0];
                let theta = std::f64::consts::PI + p[1];
                (vartheta, -theta - vartheta, theta)
            })
            .collect()
    }

    pub fn to_json(&self) -> Result<String, QubitizationError> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self, QubitizationError> {
        let sched: PhaseSchedule = serde_json::from_str(s)?;
        if sched.phi.len() != 2 * sched.n.saturating_sub(1) {
            return Err(QubitizationError::Completion {
                n: sched.n,
                reason: format!("expected {} phases, found {}", 2 * sched.n.saturating_sub(1), sched.phi.len()),
            });
        }
        Ok(sched)
    }
}

/// Phase schedule for `e^{i t' sin θ}` with truncation order chosen from `ε`.
pub fn compute_phase_schedule(t_prime: f64, epsilon: f64) -> Result<PhaseSchedule, QubitizationError> {
    let n = choose_n(t_prime, epsilon)?;
    if n == 1 {
        return Ok(PhaseSchedule {
            n,
            t_prime,
            epsilon,
            phi: Vec::new(),
            achieved_error: Some(readout_sup_error(&[], t_prime, 2001)),
        });
    }
    let b = error_bound(t_prime, n);
    // 32 samples per degree keeps the sampled sup within a fraction of a percent.
    let points = 4001usize.max(32 * (n - 1));
    let mut best: Option<(f64, Vec<f64>)> = None;
    for &width in &[0.5, 0.75, 0.25, 1.0] {
        for &frac in &[0.25, 0.5, 0.9, 0.1, 0.05] {
            let Some(phi) = phases_for(t_prime, n, frac * b, width) else {
                continue;
            };
            let err = readout_sup_error(&phi, t_prime, points);
            if !err.is_finite() {
                continue;
            }
            let done = err <= 0.99 * b;
            if best.as_ref().map_or(true, |(e, _)| err < *e) {
                best = Some((err, phi));
            }
            if done {
                break;
            }
        }
        if best.as_ref().is_some_and(|(e, _)| *e <= 0.99 * b) {
            break;
        }
    }
    let (err, phi) = best.ok_or_else(|| QubitizationError::Completion {
        n,
        reason: "complementary polynomial is not positive on the circle".into(),
    })?;
    Ok(PhaseSchedule {
        n,
        t_prime,
        epsilon,
        phi,
        achieved_error: Some(err),
    })
}

