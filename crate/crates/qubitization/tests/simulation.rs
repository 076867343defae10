use num_complex::Complex64;
use vlasim_plasma::{build_hamiltonian, compute_encoding, initial_state, LandauConfig};
use vlasim_qubitization::{
    build_c_hat, compute_phase_schedule, run_simulation, run_simulation_with, BlockEncoding, CHatRunner, DenseQuery,
    QueryPath,
};
use vlasim_statevector::{RegisterLayout, StateVector};

fn cfg(n: usize, t: f64, eps: f64) -> LandauConfig {
    LandauConfig::maxwellian(0.4, n, 4.5, t, eps).unwrap()
}

fn input(c: &LandauConfig) -> StateVector {
    let layout = RegisterLayout::new(c.grid.n_points.trailing_zeros() as usize);
    StateVector::from_data(layout, &initial_state(c).unwrap().data_vector()).unwrap()
}

#[test]
fn sliced_runner_matches_gate_level_circuit() {
    let c = cfg(4, 1.5, 1e-4);
    let enc = compute_encoding(&c).unwrap();
    let be = BlockEncoding::new(&enc, RegisterLayout::new(2)).unwrap();
    let sched = compute_phase_schedule(c.t / enc.beta, c.epsilon).unwrap();
    let x = input(&c);

    let mut gate_level = x.clone();
    build_c_hat(&be.u(), &be.layout, &sched).apply(&mut gate_level).unwrap();
    let mut sliced = x.clone();
    CHatRunner::new(QueryPath::circuit(&be), be.layout).apply(&mut sliced.amplitudes, &sched);

    let diff = gate_level
        .amplitudes
        .iter()
        .zip(&sliced.amplitudes)
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    assert!(diff < 1e-11, "{diff}");
}

#[test]
fn dense_and_circuit_paths_agree() {
    let c = cfg(8, 4.0, 1e-6);
    let enc = compute_encoding(&c).unwrap();
    let h = build_hamiltonian(&c).unwrap();
    let be = BlockEncoding::new(&enc, RegisterLayout::new(3)).unwrap();
    let sched = compute_phase_schedule(c.t / enc.beta, c.epsilon).unwrap();
    let x = input(&c);
    let circ = run_simulation_with(&c, &x, &QueryPath::circuit(&be), &sched).unwrap();
    let dense = DenseQuery::new(&h, enc.beta, be.layout).unwrap();
    let dens = run_simulation_with(&c, &x, &QueryPath::Dense(dense), &sched).unwrap();
    for (a, b) in circ.output.iter().zip(&dens.output) {
        assert!((a - b).norm() < 1e-9);
    }
}

#[test]
fn error_and_failure_within_bounds() {
    for &eps in &[1e-2, 1e-4, 1e-6] {
        for &t in &[0.5, 3.0, 8.0] {
            let c = cfg(8, t, eps);
            let r = run_simulation(&c, &input(&c)).unwrap();
            let s = r.summary;
            assert!(s.epsilon_actual <= s.epsilon_bound, "t={t} ε={eps}: {s:?}");
            assert!(s.epsilon_bound <= eps);
            assert!(s.failure_probability <= 2.0 * s.epsilon_actual + 1e-10, "{s:?}");
        }
    }
}

#[test]
fn field_stays_imaginary() {
    let c = cfg(8, 5.0, 1e-6);
    let r = run_simulation(&c, &input(&c)).unwrap();
    let e = r.output[8];
    assert!(e.re.abs() <= 1e-8, "{e}");
    assert!(e.im.abs() > 1e-3);
}

#[test]
fn zero_time_is_identity() {
    let c = cfg(8, 0.0, 1e-3);
    let x = input(&c);
    let r = run_simulation(&c, &x).unwrap();
    assert_eq!(r.summary.query_count, 0);
    for (a, b) in r.final_state.amplitudes.iter().zip(&x.amplitudes) {
        assert!((a - b).norm() < 1e-14);
    }
}

#[test]
fn rejects_input_outside_good_subspace() {
    let c = cfg(4, 1.0, 1e-3);
    let mut x = input(&c);
    let l = x.layout;
    x.amplitudes[l.good_index(0) | 1 << l.a(0)] = Complex64::new(0.1, 0.0);
    assert!(run_simulation(&c, &x).is_err());
    let mut y = input(&c);
    y.amplitudes[l.good_index(6)] = Complex64::new(0.1, 0.0);
    assert!(run_simulation(&c, &y).is_err());
}
