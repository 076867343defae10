use num_complex::Complex64;
use proptest::prelude::*;
use std::f64::consts::PI;
use vlasim_oracle::*;
use vlasim_plasma::*;

fn reference() -> (ArrowheadHamiltonian, InitialState) {
    let cfg = LandauConfig::reference();
    (build_hamiltonian(&cfg).unwrap(), initial_state(&cfg).unwrap())
}

fn norm(x: &[Complex64]) -> f64 {
    x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

#[test]
fn norm_conserved_over_reference_window() {
    let (h, x0) = reference();
    let eig = eigendecompose(&h).unwrap();
    let x = x0.data_vector();
    for t in uniform_times(8.0 * PI, 0.05) {
        let xt = eig.evolve(&x, t).unwrap();
        assert!((norm(&xt) - 1.0).abs() < 1e-10, "t = {t}");
    }
}

#[test]
fn group_property() {
    let (h, x0) = reference();
    let eig = eigendecompose(&h).unwrap();
    let x = x0.data_vector();
    for (t1, t2) in [(0.3, 1.7), (5.0, 12.5), (8.0 * PI, 0.1)] {
        let a = eig.evolve(&eig.evolve(&x, t1).unwrap(), t2).unwrap();
        let b = eig.evolve(&x, t1 + t2).unwrap();
        for (p, q) in a.iter().zip(&b) {
            assert!((p - q).norm() < 1e-9);
        }
    }
}

#[test]
fn central_difference_converges_quadratically() {
    let (h, x0) = reference();
    let eig = eigendecompose(&h).unwrap();
    let x = x0.data_vector();
    let t = 3.7;
    let hx = h.apply(&eig.evolve(&x, t).unwrap());
    let err = |dt: f64| {
        let p = eig.evolve(&x, t + dt).unwrap();
        let m = eig.evolve(&x, t - dt).unwrap();
        p.iter()
            .zip(&m)
            .zip(&hx)
            .map(|((a, b), d)| ((a - b) / (2.0 * dt) + Complex64::i() * d).norm())
            .fold(0.0, f64::max)
    };
    let (e3, e4) = (err(1e-3), err(1e-4));
    let ratio = e3 / e4;
    assert!(ratio > 50.0 && ratio < 200.0, "ratio {ratio} ({e3:e} / {e4:e})");
}

#[test]
fn field_stays_imaginary() {
    let (h, x0) = reference();
    let s = evolve_series(&h, &x0, &uniform_times(8.0 * PI, 0.05), false).unwrap();
    for e in &s.e_field {
        assert!(e.re.abs() <= 1e-9);
    }
}

#[test]
fn first_sample_is_poisson_field() {
    let (h, x0) = reference();
    let s = evolve_series(&h, &x0, &[0.0], true).unwrap();
    assert!((s.e_field[0] - x0.e_field).norm() < 1e-13);
    let snap = &s.f_prime.unwrap()[0];
    for (a, b) in snap.iter().zip(&x0.f_prime) {
        assert!((a - b).norm() < 1e-13);
    }
}

#[test]
fn zero_k_is_a_two_level_rotation() {
    let mut cfg = LandauConfig::reference();
    cfg.k = 0.0;
    let h = build_hamiltonian(&cfg).unwrap();
    let x0 = initial_state(&LandauConfig::reference()).unwrap();
    let x = x0.data_vector();
    let n = h.n_v();
    let omega = h.border.iter().map(|u| u * u).sum::<f64>().sqrt();
    let overlap: Complex64 = (0..n).map(|j| x[j] * h.border[j] / omega).sum();
    let eig = eigendecompose(&h).unwrap();
    for t in [0.5, 2.0, 7.3, 20.0] {
        let got = eig.evolve(&x, t).unwrap()[n];
        let want = x[n] * (omega * t).cos() - Complex64::i() * overlap * (omega * t).sin();
        assert!((got - want).norm() < 1e-12, "t = {t}");
    }
}

#[test]
fn envelope_decays_after_first_period() {
    let (h, x0) = reference();
    let s = evolve_series(&h, &x0, &uniform_times(8.0 * PI, 0.05), false).unwrap();
    let a: Vec<f64> = s.e_field.iter().map(|e| e.norm()).collect();
    let peaks: Vec<(f64, f64)> = (1..a.len() - 1)
        .filter(|&i| a[i] > a[i - 1] && a[i] >= a[i + 1] && s.times[i] > 2.0 * PI)
        .map(|i| (s.times[i], a[i].ln()))
        .collect();
    assert!(peaks.len() >= 8);
    // Least-squares slope of log-peak against time.
    let m = peaks.len() as f64;
    let (st, sy) = peaks.iter().fold((0.0, 0.0), |(a, b), (t, y)| (a + t, b + y));
    let (tb, yb) = (st / m, sy / m);
    let num: f64 = peaks.iter().map(|(t, y)| (t - tb) * (y - yb)).sum();
    let den: f64 = peaks.iter().map(|(t, _)| (t - tb).powi(2)).sum();
    let slope = num / den;
    assert!((slope + 0.0661).abs() < 0.01, "slope {slope}");
    let worst = peaks.iter().map(|(t, y)| (y - (yb + slope * (t - tb))).abs()).fold(0.0, f64::max);
    assert!(worst < 0.05);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn evolution_is_unitary(k in 0.05f64..1.2, p in 1u32..7, vmax in 2.0f64..8.0, t in 0.0f64..60.0) {
        let cfg = LandauConfig::maxwellian(k, 1 << p, vmax, t, 1e-3).unwrap();
        let h = build_hamiltonian(&cfg).unwrap();
        let x0 = initial_state(&cfg).unwrap();
        let xt = exact_evolve(&h, &x0, t).unwrap();
        prop_assert!((norm(&xt) - 1.0).abs() < 1e-10);
        prop_assert!(xt[h.n_v()].re.abs() < 1e-9);
    }
}
