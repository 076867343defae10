use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::ReadoutError;

/// `2π·sqrt(p(1−p))/M + π²/M²`
pub fn ae_error_bound(p: f64, m: usize) -> Result<f64, ReadoutError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(ReadoutError::Probability(p));
    }
    if m == 0 {
        return Err(ReadoutError::Iterations);
    }
    let m = m as f64;
    let pi = std::f64::consts::PI;
    Ok(2.0 * pi * (p * (1.0 - p)).sqrt() / m + pi * pi / (m * m))
}

/// Fraction of successes in `shots` Bernoulli(p) draws.
pub fn sampling_comparator(p: f64, shots: usize, seed: u64) -> Result<f64, ReadoutError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(ReadoutError::Probability(p));
    }
    if shots == 0 {
        return Err(ReadoutError::Iterations);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let hits = (0..shots).filter(|_| rng.gen_bool(p)).count();
    Ok(hits as f64 / shots as f64)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AmplitudeEstimate {
    pub p_true: f64,
    pub m: usize,
    pub delta_bound: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub estimate: Option<f64>,
}

impl AmplitudeEstimate {
    pub fn new(p: f64, m: usize) -> Result<Self, ReadoutError> {
        Ok(AmplitudeEstimate {
            p_true: p,
            m,
            delta_bound: ae_error_bound(p, m)?,
            estimate: None,
        })
    }

    /// Attaches a sampled estimate using the same number of state preparations.
    pub fn with_sampling(mut self, seed: u64) -> Result<Self, ReadoutError> {
        self.estimate = Some(sampling_comparator(self.p_true, self.cost_multiplier(), seed)?);
        Ok(self)
    }

    /// Calls to the full algorithm per estimate.
    pub fn cost_multiplier(&self) -> usize {
        2 * self.m
    }

    /// Smallest `M` whose bound is at most `delta`.
    pub fn iterations_for(p: f64, delta: f64) -> Result<usize, ReadoutError> {
        let mut m = 1usize;
        while ae_error_bound(p, m)? > delta {
            m *= 2;
        }
        let (mut lo, mut hi) = (m / 2, m);
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if ae_error_bound(p, mid)? > delta {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(hi.max(1))
    }

    /// Shots for direct sampling to reach `delta` at two standard deviations.
    pub fn shots_for(p: f64, delta: f64) -> usize {
        (4.0 * p * (1.0 - p) / (delta * delta)).ceil().max(1.0) as usize
    }
}
