//! Fitting `A e^{−γt} cos(ωt − ρ)` to `Im Ẽ(t)`.

use nalgebra::{Matrix4, Vector4};
use serde::{Deserialize, Serialize};
use vlasim_oracle::TimeSeries;

use crate::ReadoutError;

/// One oscillation period of transient is skipped by default.
pub const DEFAULT_WINDOW: (f64, f64) = (2.0 * std::f64::consts::PI, 8.0 * std::f64::consts::PI);

// The default window holds about eight extrema at ω ≈ 1.285.
const MIN_EXTREMA: usize = 6;
const MAX_STEPS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FitResult {
    pub amplitude: f64,
    pub gamma: f64,
    pub omega: f64,
    pub rho: f64,
    /// Root-mean-square misfit over the window.
    pub residual: f64,
}

impl FitResult {
    pub fn model(&self, t: f64) -> f64 {
        self.amplitude * (-self.gamma * t).exp() * (self.omega * t - self.rho).cos()
    }
}

/// Local extrema `(t, y)` refined by a parabola through three samples.
pub fn find_extrema(t: &[f64], y: &[f64]) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    for i in 1..y.len().saturating_sub(1) {
        let (a, b, c) = (y[i - 1], y[i], y[i + 1]);
        let is_max = b > a && b >= c;
        let is_min = b < a && b <= c;
        if !(is_max || is_min) {
            continue;
        }
        let denom = a - 2.0 * b + c;
        let shift = if denom != 0.0 { 0.5 * (a - c) / denom } else { 0.0 };
        let h = t[i + 1] - t[i];
        out.push((t[i] + shift * h, b - 0.25 * (a - c) * shift));
    }
    out
}

fn wrap(x: f64) -> f64 {
    let tau = 2.0 * std::f64::consts::PI;
    let r = x.rem_euclid(tau);
    if r > std::f64::consts::PI {
        r - tau
    } else {
        r
    }
}

fn initial_guess(ext: &[(f64, f64)]) -> [f64; 4] {
    let n = ext.len() as f64;
    // ln|y| = ln A − γ t
    let (st, sl) = ext.iter().fold((0.0, 0.0), |(a, b), &(t, y)| (a + t, b + y.abs().ln()));
    let (mt, ml) = (st / n, sl / n);
    let (mut sxy, mut sxx) = (0.0, 0.0);
    for &(t, y) in ext {
        sxy += (t - mt) * (y.abs().ln() - ml);
        sxx += (t - mt) * (t - mt);
    }
    let slope = sxy / sxx;
    let gamma = -slope;
    let amp = (ml - slope * mt).exp();
    let spacing = (ext[ext.len() - 1].0 - ext[0].0) / (n - 1.0);
    let omega = std::f64::consts::PI / spacing;
    let (t0, y0) = ext[0];
    let rho = wrap(omega * t0 - if y0 > 0.0 { 0.0 } else { std::f64::consts::PI });
    [amp, gamma, omega, rho]
}

fn residuals(p: &[f64; 4], t: &[f64], y: &[f64]) -> f64 {
    t.iter()
        .zip(y)
        .map(|(&t, &y)| {
            let m = p[0] * (-p[1] * t).exp() * (p[2] * t - p[3]).cos();
            (m - y) * (m - y)
        })
        .sum()
}

/// Fits `Im Ẽ` on `window`. Needs at least six extrema inside the window.
pub fn fit_damped_sinusoid(series: &TimeSeries, window: (f64, f64)) -> Result<FitResult, ReadoutError> {
    let (t, y): (Vec<f64>, Vec<f64>) = series
        .times
        .iter()
        .zip(&series.e_field)
        .filter(|(&t, _)| t >= window.0 && t <= window.1)
        .map(|(&t, e)| (t, e.im))
        .unzip();
    if t.is_empty() {
        return Err(ReadoutError::EmptySeries);
    }
    let ext = find_extrema(&t, &y);
    if ext.len() < MIN_EXTREMA {
        return Err(ReadoutError::TooFewExtrema {
            found: ext.len(),
            needed: MIN_EXTREMA,
        });
    }

    let mut p = initial_guess(&ext);
    let mut cost = residuals(&p, &t, &y);
    let mut lambda = 1e-3;
    let mut converged = false;
    for _ in 0..MAX_STEPS {
        let mut jtj = Matrix4::<f64>::zeros();
        let mut jtr = Vector4::<f64>::zeros();
        for (&ti, &yi) in t.iter().zip(&y) {
            let env = (-p[1] * ti).exp();
            let (s, c) = (p[2] * ti - p[3]).sin_cos();
            let m = p[0] * env * c;
            let j = Vector4::new(env * c, -ti * m, -p[0] * env * s * ti, p[0] * env * s);
            jtj += j * j.transpose();
            jtr += j * (m - yi);
        }
        let mut improved = false;
        while lambda < 1e12 {
            let mut a = jtj;
            for k in 0..4 {
                a[(k, k)] *= 1.0 + lambda;
            }
            let Some(step) = a.lu().solve(&(-jtr)) else {
                lambda *= 10.0;
                continue;
            };
            let trial = [p[0] + step[0], p[1] + step[1], p[2] + step[2], p[3] + step[3]];
            let c2 = residuals(&trial, &t, &y);
            if c2 < cost {
                let rel = (cost - c2) / cost.max(f64::MIN_POSITIVE);
                let small = step.norm() <= 1e-12 * (1.0 + p.iter().map(|v| v * v).sum::<f64>().sqrt());
                p = trial;
                cost = c2;
                lambda = (lambda / 10.0).max(1e-15);
                improved = true;
                converged = rel < 1e-14 || small;
                break;
            }
            lambda *= 10.0;
        }
        if !improved {
            // No downhill step left: at a minimum to machine precision.
            converged = true;
        }
        if converged {
            break;
        }
    }
    if !converged || !p.iter().all(|v| v.is_finite()) {
        return Err(ReadoutError::NoConvergence(MAX_STEPS));
    }
    if p[0] < 0.0 {
        p[0] = -p[0];
        p[3] += std::f64::consts::PI;
    }
    Ok(FitResult {
        amplitude: p[0],
        gamma: p[1],
        omega: p[2],
        rho: wrap(p[3]),
        residual: (cost / t.len() as f64).sqrt(),
    })
}

/// `sqrt(Σ|Ẽ(t_i)|² / M)`
pub fn e_rms(series: &TimeSeries) -> Result<f64, ReadoutError> {
    if series.e_field.is_empty() {
        return Err(ReadoutError::EmptySeries);
    }
    let s: f64 = series.e_field.iter().map(|z| z.norm_sqr()).sum();
    Ok((s / series.e_field.len() as f64).sqrt())
}
