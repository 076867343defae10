//! Phase factors for the readout `⟨+|R_{φ_{L-1}}⋯R_{φ_0}|+⟩ ≈ e^{i t' sin θ}`.
//!
//! The target is a damped Jacobi–Anger truncation `P(z) = Σ c_m z^m`, completed
//! to a unitary Laurent matrix with an outer (minimum phase) factor from the
//! cepstrum, then peeled one layer at a time.

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::bessel::bessel_j_all;

type M2 = [[Complex64; 2]; 2];

const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };
const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };
const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// `R_φ(θ) = [[cos θ/2, −i sin θ/2 e^{−iφ}], [−i sin θ/2 e^{iφ}, cos θ/2]]`
pub fn layer_matrix(phi: f64, theta: f64) -> M2 {
    let (s, c) = (0.5 * theta).sin_cos();
    let e = Complex64::from_polar(1.0, phi);
    [
        [Complex64::new(c, 0.0), -I * s * e.conj()],
        [-I * s * e, Complex64::new(c, 0.0)],
    ]
}

/// `⟨+|R_{φ_{L-1}}⋯R_{φ_0}|+⟩`
pub fn readout_polynomial(phi: &[f64], theta: f64) -> Complex64 {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let mut v = [Complex64::new(h, 0.0); 2];
    for &p in phi {
        let m = layer_matrix(p, theta);
        v = [m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]];
    }
    (v[0] + v[1]) * h
}

/// `max_θ |readout(θ) − e^{i t' sin θ}|` on `points` samples of `[−π, π]`.
pub fn readout_sup_error(phi: &[f64], t_prime: f64, points: usize) -> f64 {
    let pi = std::f64::consts::PI;
    (0..points)
        .map(|i| {
            let th = -pi + 2.0 * pi * i as f64 / (points - 1) as f64;
            (readout_polynomial(phi, th) - Complex64::from_polar(1.0, t_prime * th.sin())).norm()
        })
        .fold(0.0, f64::max)
}

/// Coefficients `c_m`, `|m| ≤ N`, of the damped target: a blend of the
/// truncated series and its Fejér smoothing, renormalised so `P(1) = 1`.
pub(crate) fn target_coefficients(t_prime: f64, big_n: usize, delta: f64, width_frac: f64) -> Vec<f64> {
    let d = ((big_n as f64 * width_frac) as usize).max(1);
    let top = big_n + d;
    let jpos = bessel_j_all(top, t_prime);
    let j = |m: i64| {
        let a = m.unsigned_abs() as usize;
        if m < 0 && a % 2 == 1 {
            -jpos[a]
        } else {
            jpos[a]
        }
    };
    let w = (d + 1) as f64;
    let mut c: Vec<f64> = (-(big_n as i64)..=big_n as i64)
        .map(|m| {
            let smooth: f64 = (-(d as i64)..=d as i64)
                .map(|k| (1.0 - k.unsigned_abs() as f64 / w) / w * j(m - k))
                .sum();
            (1.0 - delta) * j(m) + delta * smooth
        })
        .collect();
    let total: f64 = c.iter().sum();
    c[big_n] += 1.0 - total;
    c
}

/// Laurent matrix polynomial in `w`, stored densely for powers `−deg..=deg`.
struct Laurent {
    deg: usize,
    coeffs: Vec<M2>,
}

impl Laurent {
    fn zeros(deg: usize) -> Self {
        Laurent {
            deg,
            coeffs: vec![[[ZERO; 2]; 2]; 2 * deg + 1],
        }
    }

    fn at(&mut self, p: i64) -> &mut M2 {
        &mut self.coeffs[(p + self.deg as i64) as usize]
    }

    fn get(&self, p: i64) -> M2 {
        let i = p + self.deg as i64;
        if i < 0 || i as usize >= self.coeffs.len() {
            [[ZERO; 2]; 2]
        } else {
            self.coeffs[i as usize]
        }
    }
}

fn mat_mul(a: &M2, b: &M2) -> M2 {
    let mut o = [[ZERO; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            o[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    o
}

fn mat_add(a: &M2, b: &M2) -> M2 {
    [[a[0][0] + b[0][0], a[0][1] + b[0][1]], [a[1][0] + b[1][0], a[1][1] + b[1][1]]]
}

/// Complementary coefficients `q_k`, `k = 0..=2N`, with `|Q|² = 1 − |P|²` on the circle.
fn complete(c: &[f64], big_n: usize) -> Option<Vec<f64>> {
    let ng = 4096usize.max((16 * big_n).next_power_of_two());
    let mut planner = FftPlanner::<f64>::new();
    let fwd = planner.plan_fft_forward(ng);
    let inv = planner.plan_fft_inverse(ng);

    let mut buf = vec![ZERO; ng];
    for (i, &v) in c.iter().enumerate() {
        let m = i as i64 - big_n as i64;
        buf[m.rem_euclid(ng as i64) as usize] = Complex64::new(v, 0.0);
    }
    inv.process(&mut buf);

    // g = 1 − |P|² has a double zero at θ = 0 since P(1) = 1; divide it out.
    let mut h: Vec<f64> = (0..ng)
        .map(|i| {
            let th = 2.0 * std::f64::consts::PI * i as f64 / ng as f64;
            (1.0 - buf[i].norm_sqr()) / (2.0 - 2.0 * th.cos())
        })
        .collect();
    h[0] = 0.5 * (h[1] + h[ng - 1]);
    if !(h.iter().cloned().fold(f64::INFINITY, f64::min) > 0.0) {
        return None;
    }

    let mut ce: Vec<Complex64> = h.iter().map(|&x| Complex64::new(x.ln(), 0.0)).collect();
    inv.process(&mut ce);
    let scale = 1.0 / ng as f64;
    let mut cc = vec![ZERO; ng];
    cc[0] = Complex64::new(0.5 * ce[0].re * scale, 0.0);
    for i in 1..ng / 2 {
        cc[i] = Complex64::new(ce[i].re * scale, 0.0);
    }
    fwd.process(&mut cc);
    for z in cc.iter_mut() {
        *z = z.exp();
    }
    inv.process(&mut cc);
    let o: Vec<f64> = cc[..2 * big_n].iter().map(|z| z.re * scale).collect();

    // Restore the removed zero: q(z) = (1 − z)·o(z).
    let mut q = vec![0.0; 2 * big_n + 1];
    for (k, &ok) in o.iter().enumerate() {
        q[k] += ok;
        q[k + 1] -= ok;
    }
    Some(q)
}

/// Peels `L = 2N` layers off the completed Laurent matrix.
fn peel(c: &[f64], q: &[f64], big_n: usize) -> Vec<f64> {
    let l = 2 * big_n;
    let mut f = Laurent::zeros(l);
    let nn = big_n as i64;
    for (i, &v) in c.iter().enumerate() {
        let m = i as i64 - nn;
        f.at(2 * m)[0][0] += v;
        f.at(-2 * m)[1][1] += v;
    }
    for (k, &qk) in q.iter().enumerate() {
        let e = k as i64 - nn;
        let v = I * qk;
        f.at(2 * e)[0][1] += v;
        f.at(-2 * e)[1][0] += -v.conj();
    }

    let mut phases = Vec::with_capacity(l);
    for d in (1..=l as i64).rev() {
        let top = f.get(d);
        let n0 = top[0][0].norm_sqr() + top[1][0].norm_sqr();
        let n1 = top[0][1].norm_sqr() + top[1][1].norm_sqr();
        let col = if n0 > n1 { 0 } else { 1 };
        let norm = n0.max(n1).sqrt();
        let v = if norm > 0.0 {
            [top[0][col] / norm, top[1][col] / norm]
        } else {
            [ONE, ZERO]
        };
        let pm = [[v[0] * v[0].conj(), v[0] * v[1].conj()], [v[1] * v[0].conj(), v[1] * v[1].conj()]];
        let pp = [[ONE - pm[0][0], -pm[0][1]], [-pm[1][0], ONE - pm[1][1]]];
        phases.push((2.0 * pm[1][0].im).atan2((pm[1][1] - pm[0][0]).re));

        let mut next = Laurent::zeros((d - 1) as usize);
        for p in -(d - 1)..=(d - 1) {
            *next.at(p) = mat_add(&mat_mul(&pm, &f.get(p + 1)), &mat_mul(&pp, &f.get(p - 1)));
        }
        f = next;
    }
    phases.reverse();
    phases
}

/// Phases of length `2(n − 1)` for the given damping, or `None` if the
/// completion is infeasible.
pub(crate) fn phases_for(t_prime: f64, n: usize, delta: f64, width_frac: f64) -> Option<Vec<f64>> {
    let big_n = n.saturating_sub(1);
    if big_n == 0 {
        return Some(Vec::new());
    }
    let c = target_coefficients(t_prime, big_n, delta, width_frac);
    let q = complete(&c, big_n)?;
    Some(peel(&c, &q, big_n))
}
