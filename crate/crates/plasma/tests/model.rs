use proptest::prelude::*;
use vlasim_plasma::*;

// Reference values below were produced by an independent NumPy evaluation of
// the same definitions (dense eigensolver, direct sums).
const REF_G_MAX: f64 = 0.2419081193668138;
const REF_GAMMA: f64 = 0.3203695692515556;
const REF_C_SQ: f64 = 0.4280572866995928;
const REF_BETA: f64 = 0.237809603721996;
const REF_T_PRIME: f64 = 105.68429884816176;
const REF_LAMBDA: f64 = 4.9801446644888845;
const REF_LAMBDA_PRIME: f64 = 2.7999626066325964;
const REF_NORM_H: f64 = 1.800083303151271;

#[test]
fn reference_encoding_parameters() {
    let cfg = LandauConfig::reference();
    let enc = compute_encoding(&cfg).unwrap();
    assert!((enc.g_max - REF_G_MAX).abs() < 1e-14);
    assert!((enc.gamma_cap - REF_GAMMA).abs() < 1e-13);
    assert!((enc.c_sq - REF_C_SQ).abs() < 1e-13);
    assert!((enc.beta - REF_BETA).abs() < 1e-13);
    assert!((enc.lambda_bound - REF_LAMBDA).abs() < 1e-12);
    assert!((enc.lambda_prime - REF_LAMBDA_PRIME).abs() < 1e-12);
    let t_prime = cfg.t / enc.beta;
    assert!((t_prime - REF_T_PRIME).abs() < 1e-10);
    // Published rounding of the rescaled time.
    assert!((t_prime - 105.7).abs() < 0.3);
    assert!((enc.gamma_cap - 0.320).abs() < 5e-4);
    assert!((enc.c_sq - 0.428).abs() < 5e-4);
    assert!((enc.beta - 0.238).abs() < 5e-4);
}

#[test]
fn reference_norm_bounded_by_lambda_prime() {
    let cfg = LandauConfig::reference();
    let h = build_hamiltonian(&cfg).unwrap();
    let enc = compute_encoding(&cfg).unwrap();
    let norm = h.spectral_norm();
    assert!((norm - REF_NORM_H).abs() < 1e-12);
    assert!(norm <= enc.lambda_prime);
    assert!((enc.lambda_prime - 2.8).abs() < 1e-3);
}

#[test]
fn continuum_limit_of_initial_data() {
    let cfg = LandauConfig::maxwellian(0.4, 1024, 4.5, 0.0, 0.1).unwrap();
    let s = initial_state(&cfg).unwrap();
    let f2: f64 = s.f_prime.iter().map(|z| z.norm_sqr()).sum();
    // ∫G over [−4.5, 4.5] = erf(4.5/√2) = 0.99999320
    assert!((f2 - 0.9999932046).abs() < 1e-6, "{f2}");
    assert!((s.e_field.norm() - 2.5 * 0.9999932046).abs() < 1e-5);
    let frac = s.eta * s.e_field.norm();
    assert!((frac - 1.0 / (1.0 + 0.16_f64).sqrt()).abs() < 1e-5);
}

fn config_strategy() -> impl Strategy<Value = LandauConfig> {
    (0.05f64..1.5, 1u32..8, 1.0f64..10.0).prop_map(|(k, p, vmax)| LandauConfig::maxwellian(k, 1 << p, vmax, 1.0, 1e-3).unwrap())
}

fn custom_strategy() -> impl Strategy<Value = LandauConfig> {
    (0.05f64..1.5, 1u32..6, 1.0f64..10.0)
        .prop_flat_map(|(k, p, vmax)| {
            let n = 1usize << p;
            (Just((k, n, vmax)), proptest::collection::vec(0.0f64..1.0, n))
        })
        .prop_filter("nonzero background", |(_, w)| w.iter().any(|x| *x > 1e-3))
        .prop_map(|((k, n, vmax), w)| {
            let grid = build_grid(n, vmax).unwrap();
            let background = BackgroundDistribution::custom(&grid, w).unwrap();
            LandauConfig {
                k,
                grid,
                background,
                t: 1.0,
                epsilon: 1e-3,
            }
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn grid_is_symmetric(p in 1u32..10, vmax in 0.1f64..20.0) {
        let g = build_grid(1 << p, vmax).unwrap();
        let n = g.n_points;
        prop_assert_eq!(g.velocities[0], -vmax);
        prop_assert_eq!(g.velocities[n - 1], vmax);
        for j in 0..n {
            prop_assert_eq!(g.velocities[n - 1 - j], -g.velocities[j]);
            let uniform = -vmax + j as f64 * g.dv;
            prop_assert!((g.velocities[j] - uniform).abs() < 1e-12 * vmax);
        }
    }

    #[test]
    fn hamiltonian_is_symmetric(cfg in custom_strategy()) {
        let h = build_hamiltonian(&cfg).unwrap().to_dense();
        prop_assert_eq!(h.clone(), h.transpose());
    }

    #[test]
    fn scaled_norm_at_most_one(cfg in custom_strategy()) {
        let h = build_hamiltonian(&cfg).unwrap();
        let enc = compute_encoding(&cfg).unwrap();
        prop_assert!(enc.beta * h.spectral_norm() <= 1.0 + 1e-12);
        prop_assert!(h.spectral_norm() <= enc.lambda_prime + 1e-12);
    }

    #[test]
    fn lambda_sandwich(cfg in custom_strategy()) {
        let enc = compute_encoding(&cfg).unwrap();
        let inv = 1.0 / enc.beta;
        prop_assert!(0.8 * enc.lambda_bound <= inv + 1e-12);
        prop_assert!(inv <= enc.lambda_bound + 1e-12);
    }

    #[test]
    fn lambda_nonincreasing_under_refinement(k in 0.05f64..1.5, p in 1u32..9, vmax in 1.0f64..10.0) {
        let coarse = compute_encoding(&LandauConfig::maxwellian(k, 1 << p, vmax, 1.0, 1e-3).unwrap()).unwrap();
        let fine = compute_encoding(&LandauConfig::maxwellian(k, 2 << p, vmax, 1.0, 1e-3).unwrap()).unwrap();
        // Δv·N_v = 2 v_max + Δv, so only the g_max and Δv terms can move Λ.
        let g1 = LandauConfig::maxwellian(k, 1 << p, vmax, 1.0, 1e-3).unwrap().grid;
        let g2 = LandauConfig::maxwellian(k, 2 << p, vmax, 1.0, 1e-3).unwrap().grid;
        prop_assert!((g1.dv * g1.n_points as f64 - 2.0 * vmax - g1.dv).abs() < 1e-12 * vmax);
        prop_assert!((g2.dv * g2.n_points as f64 - 2.0 * vmax - g2.dv).abs() < 1e-12 * vmax);
        let cont_gmax = (-0.5f64).exp() / (2.0 * std::f64::consts::PI).sqrt();
        let ceiling = k * vmax + ((2.0 * vmax + g1.dv) * vmax * cont_gmax).sqrt();
        prop_assert!(fine.lambda_bound <= ceiling + 1e-12);
        prop_assert!(coarse.lambda_bound <= ceiling + 1e-12);
    }

    #[test]
    fn overlaps_reconstruct_hamiltonian(cfg in custom_strategy()) {
        let h = build_hamiltonian(&cfg).unwrap();
        let enc = compute_encoding(&cfg).unwrap();
        for j in 0..cfg.grid.n_points {
            prop_assert!((enc.omega(j) - enc.beta * h.diag[j]).norm() < 1e-12);
            prop_assert!((enc.upsilon(j) - enc.beta * h.border[j]).norm() < 1e-12);
        }
    }

    #[test]
    fn rotation_arguments_are_admissible(cfg in config_strategy()) {
        let enc = compute_encoding(&cfg).unwrap();
        for (j, v) in cfg.grid.velocities.iter().enumerate() {
            let (d, b) = (enc.d[j], enc.b[j]);
            prop_assert!(d.norm() <= 1.0 + 1e-15 && b.norm() <= 1.0 + 1e-15);
            prop_assert!(d.re == 0.0 || d.im == 0.0);
            prop_assert!(b.re == 0.0 || b.im == 0.0);
            prop_assert_eq!(d.im != 0.0, *v < 0.0);
            let db = d * b;
            prop_assert!(db.im.abs() < 1e-15);
            prop_assert!(db.re * v >= 0.0);
        }
    }
}
