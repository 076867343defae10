use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use num_complex::Complex64;
use serde::Serialize;
use vlasim_oracle::{evolve_series, read_series_csv, uniform_times, write_series_csv, TimeSeries};
use vlasim_plasma::{
    build_hamiltonian, compute_encoding, dispersion_solve, initial_state, theory_estimates, LandauConfig,
};
use vlasim_qubitization::{
    build_c_hat, compute_phase_schedule, run_simulation_with, verify_encoding, BlockEncoding, QueryPath,
    SimulationSummary,
};
use vlasim_readout::{
    fit_damped_sinusoid, phase_retrieval, prep_circuit, prepare_state, AmplitudeEstimate, ComplexReadout, FitResult,
    PrepSummary, ZETAS,
};
use vlasim_statevector::{RegisterLayout, StateVector};

use crate::{CliError, ExperimentConfig};

/// Maps `f` over `items` on all available cores, keeping the input order.
pub fn par_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(items.len().max(1));
    if workers <= 1 {
        return items.iter().map(f).collect();
    }
    let chunk = items.len().div_ceil(workers);
    std::thread::scope(|s| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|c| s.spawn(|| c.iter().map(&f).collect::<Vec<R>>()))
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    })
}

fn create(dir: &Path, name: &str) -> Result<(PathBuf, BufWriter<File>), CliError> {
    std::fs::create_dir_all(dir)?;
    let path = dir.join(name);
    let f = File::create(&path).map_err(|e| CliError::Config(format!("cannot write {}: {e}", path.display())))?;
    Ok((path, BufWriter::new(f)))
}

fn write_json<T: Serialize>(dir: &Path, name: &str, value: &T) -> Result<PathBuf, CliError> {
    let (path, mut w) = create(dir, name)?;
    serde_json::to_writer_pretty(&mut w, value)?;
    writeln!(w)?;
    w.flush()?;
    Ok(path)
}

fn write_series(dir: &Path, name: &str, s: &TimeSeries) -> Result<PathBuf, CliError> {
    let (path, mut w) = create(dir, name)?;
    write_series_csv(s, &mut w)?;
    w.flush()?;
    Ok(path)
}

fn input_state(cfg: &LandauConfig) -> Result<(StateVector, f64), CliError> {
    let x0 = initial_state(cfg)?;
    let layout = RegisterLayout::new(cfg.grid.n_qubits());
    Ok((StateVector::from_data(layout, &x0.data_vector()).map_err(|e| CliError::Invariant(e.to_string()))?, x0.eta))
}

pub fn oracle_series(cfg: &LandauConfig, times: &[f64]) -> Result<TimeSeries, CliError> {
    let h = build_hamiltonian(cfg)?;
    let x0 = initial_state(cfg)?;
    Ok(evolve_series(&h, &x0, times, false)?)
}

/// Field series from the qubitized circuit, one schedule per sample time.
pub fn circuit_series(cfg: &LandauConfig, times: &[f64]) -> Result<(TimeSeries, Vec<SimulationSummary>), CliError> {
    let enc = compute_encoding(cfg)?;
    let layout = RegisterLayout::new(cfg.grid.n_qubits());
    let query = QueryPath::circuit(&BlockEncoding::new(&enc, layout)?);
    let (input, eta) = input_state(cfg)?;
    let n = cfg.grid.n_points;
    let runs = par_map(times, |&t| -> Result<(Complex64, SimulationSummary), CliError> {
        let sched = compute_phase_schedule(t / enc.beta, cfg.epsilon)?;
        let r = run_simulation_with(&cfg.with_time(t), &input, &query, &sched)?;
        Ok((r.output[n] / eta, r.summary))
    });
    let mut e_field = Vec::with_capacity(times.len());
    let mut reports = Vec::with_capacity(times.len());
    for r in runs {
        let (e, s) = r?;
        e_field.push(e);
        reports.push(s);
    }
    Ok((
        TimeSeries {
            times: times.to_vec(),
            e_field,
            f_prime: None,
        },
        reports,
    ))
}

fn check_summary(s: &SimulationSummary, label: &str) -> Result<(), CliError> {
    if s.epsilon_actual > s.epsilon_bound + 1e-12 {
        return Err(CliError::Invariant(format!(
            "{label}: epsilon_actual {:.3e} exceeds bound {:.3e}",
            s.epsilon_actual, s.epsilon_bound
        )));
    }
    if s.failure_probability > 2.0 * s.epsilon_actual + 1e-10 {
        return Err(CliError::Invariant(format!(
            "{label}: failure probability {:.3e} exceeds 2·epsilon_actual",
            s.failure_probability
        )));
    }
    Ok(())
}

#[derive(Debug, Clone)]
pub struct SimulateOutput {
    pub oracle: Option<TimeSeries>,
    pub circuit: Option<TimeSeries>,
    pub report: Option<SimulationSummary>,
    pub files: Vec<PathBuf>,
}

/// Worst-case summary over a circuit series; the query count is that of the last sample.
fn aggregate(reports: &[SimulationSummary]) -> SimulationSummary {
    reports.iter().fold(
        SimulationSummary {
            query_count: 0,
            epsilon_bound: 0.0,
            epsilon_actual: 0.0,
            failure_probability: 0.0,
        },
        |acc, s| SimulationSummary {
            query_count: acc.query_count.max(s.query_count),
            epsilon_bound: acc.epsilon_bound.max(s.epsilon_bound),
            epsilon_actual: acc.epsilon_actual.max(s.epsilon_actual),
            failure_probability: acc.failure_probability.max(s.failure_probability),
        },
    )
}

pub fn cmd_simulate(cfg: &ExperimentConfig) -> Result<SimulateOutput, CliError> {
    let physics = cfg.physics.landau()?;
    let times = uniform_times(physics.t, cfg.sample_dt);
    let dir = &cfg.output_dir;
    let mut out = SimulateOutput {
        oracle: None,
        circuit: None,
        report: None,
        files: Vec::new(),
    };
    if cfg.path.oracle() {
        let s = oracle_series(&physics, &times)?;
        log::info!("oracle series: {} samples", s.len());
        out.files.push(write_series(dir, "series_oracle.csv", &s)?);
        out.oracle = Some(s);
    }
    if cfg.path.circuit() {
        let (s, reports) = circuit_series(&physics, &times)?;
        let summary = aggregate(&reports);
        log::info!(
            "circuit series: {} samples, max queries {}, max error {:.3e}",
            s.len(),
            summary.query_count,
            summary.epsilon_actual
        );
        out.files.push(write_series(dir, "series_circuit.csv", &s)?);
        out.files.push(write_json(dir, "report.json", &summary)?);
        for (t, r) in times.iter().zip(&reports) {
            check_summary(r, &format!("t = {t}"))?;
        }
        out.circuit = Some(s);
        out.report = Some(summary);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRow {
    pub epsilon: f64,
    pub epsilon_bound: f64,
    pub query_count: usize,
    pub epsilon_actual: f64,
    pub failure_rate: f64,
}

pub fn sweep_rows(physics: &LandauConfig, epsilons: &[f64]) -> Result<Vec<SweepRow>, CliError> {
    let enc = compute_encoding(physics)?;
    let layout = RegisterLayout::new(physics.grid.n_qubits());
    let query = QueryPath::circuit(&BlockEncoding::new(&enc, layout)?);
    let (input, _) = input_state(physics)?;
    par_map(epsilons, |&eps| -> Result<SweepRow, CliError> {
        let sched = compute_phase_schedule(physics.t / enc.beta, eps)?;
        let s = run_simulation_with(&physics.with_epsilon(eps), &input, &query, &sched)?.summary;
        Ok(SweepRow {
            epsilon: eps,
            epsilon_bound: s.epsilon_bound,
            query_count: s.query_count,
            epsilon_actual: s.epsilon_actual,
            failure_rate: s.failure_probability,
        })
    })
    .into_iter()
    .collect()
}

pub fn cmd_sweep_error(cfg: &ExperimentConfig) -> Result<(Vec<SweepRow>, PathBuf), CliError> {
    let physics = cfg.physics.landau()?;
    let rows = sweep_rows(&physics, &cfg.epsilons)?;
    let (path, mut w) = create(&cfg.output_dir, "sweep_error.csv")?;
    writeln!(w, "epsilon,epsilon_bound,query_count,epsilon_actual,failure_rate")?;
    for r in &rows {
        writeln!(
            w,
            "{:.17e},{:.17e},{},{:.17e},{:.17e}",
            r.epsilon, r.epsilon_bound, r.query_count, r.epsilon_actual, r.failure_rate
        )?;
    }
    w.flush()?;
    for r in &rows {
        check_summary(
            &SimulationSummary {
                query_count: r.query_count,
                epsilon_bound: r.epsilon_bound,
                epsilon_actual: r.epsilon_actual,
                failure_probability: r.failure_rate,
            },
            &format!("epsilon = {:e}", r.epsilon),
        )?;
    }
    Ok((rows, path))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DispersionRow {
    pub k: f64,
    pub omega: f64,
    pub gamma: f64,
    pub residual: f64,
    pub omega_bohm_gross: f64,
    pub gamma_estimate: f64,
    pub converged: bool,
}

pub fn dispersion_rows(ks: &[f64]) -> Vec<DispersionRow> {
    ks.iter()
        .map(|&k| {
            let (wb, ge) = theory_estimates(k);
            match dispersion_solve(k) {
                Ok(r) => DispersionRow {
                    k,
                    omega: r.omega,
                    gamma: r.gamma,
                    residual: r.residual,
                    omega_bohm_gross: wb,
                    gamma_estimate: ge,
                    converged: true,
                },
                Err(e) => {
                    log::warn!("k = {k}: {e}");
                    DispersionRow {
                        k,
                        omega: f64::NAN,
                        gamma: f64::NAN,
                        residual: f64::NAN,
                        omega_bohm_gross: wb,
                        gamma_estimate: ge,
                        converged: false,
                    }
                }
            }
        })
        .collect()
}

pub fn cmd_dispersion(cfg: &ExperimentConfig) -> Result<(Vec<DispersionRow>, PathBuf), CliError> {
    let rows = dispersion_rows(&cfg.ks);
    let (path, mut w) = create(&cfg.output_dir, "dispersion.csv")?;
    writeln!(w, "k,omega,gamma,residual,omega_bohm_gross,gamma_estimate,converged")?;
    for r in &rows {
        writeln!(
            w,
            "{:.17e},{:.17e},{:.17e},{:.17e},{:.17e},{:.17e},{}",
            r.k, r.omega, r.gamma, r.residual, r.omega_bohm_gross, r.gamma_estimate, r.converged
        )?;
    }
    w.flush()?;
    Ok((rows, path))
}

pub fn cmd_fit(cfg: &ExperimentConfig) -> Result<(FitResult, PathBuf), CliError> {
    let series = match &cfg.series_csv {
        Some(p) => {
            let f = File::open(p).map_err(|e| CliError::Config(format!("cannot read {}: {e}", p.display())))?;
            read_series_csv(BufReader::new(f))?
        }
        None => {
            let physics = cfg.physics.landau()?;
            oracle_series(&physics, &uniform_times(physics.t, cfg.sample_dt))?
        }
    };
    let fit = fit_damped_sinusoid(&series, (cfg.fit_window[0], cfg.fit_window[1]))?;
    log::info!("fit: omega = {:.5}, gamma = {:.5}", fit.omega, fit.gamma);
    let path = write_json(&cfg.output_dir, "fit.json", &fit)?;
    Ok((fit, path))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EncodingRow {
    pub k: f64,
    pub n_points: usize,
    pub beta: f64,
    pub inv_beta: f64,
    pub lambda: f64,
    pub lambda_prime: f64,
    pub max_deviation: f64,
    pub unused_coupling: f64,
}

pub const ENCODING_TOLERANCE: f64 = 1e-10;

pub fn cmd_verify_encoding(cfg: &ExperimentConfig) -> Result<(Vec<EncodingRow>, PathBuf), CliError> {
    let mut rows = Vec::new();
    for &k in &cfg.ks {
        let mut p = cfg.physics.clone();
        p.k = k;
        let physics = p.landau()?;
        let h = build_hamiltonian(&physics)?;
        let enc = compute_encoding(&physics)?;
        let be = BlockEncoding::new(&enc, RegisterLayout::new(physics.grid.n_qubits()))?;
        let check = verify_encoding(&be.u(), &h, enc.beta, &be.layout);
        rows.push(EncodingRow {
            k,
            n_points: physics.grid.n_points,
            beta: enc.beta,
            inv_beta: 1.0 / enc.beta,
            lambda: enc.lambda_bound,
            lambda_prime: enc.lambda_prime,
            max_deviation: check.max_deviation,
            unused_coupling: check.unused_coupling,
        });
    }
    let path = write_json(&cfg.output_dir, "verify_encoding.json", &rows)?;
    for r in &rows {
        if r.max_deviation > ENCODING_TOLERANCE || r.unused_coupling > ENCODING_TOLERANCE {
            return Err(CliError::Invariant(format!(
                "k = {}: block deviation {:.3e}, unused coupling {:.3e}",
                r.k, r.max_deviation, r.unused_coupling
            )));
        }
        let slack = 1e-12 * r.lambda;
        if !(0.8 * r.lambda <= r.inv_beta + slack && r.inv_beta <= r.lambda + slack) {
            return Err(CliError::Invariant(format!("k = {}: 1/beta outside [4Λ/5, Λ]", r.k)));
        }
    }
    Ok((rows, path))
}

#[derive(Debug, Clone, Serialize)]
pub struct ReadoutDemo {
    pub prep: PrepSummary,
    /// `⟨E|A|0⟩` read directly off the statevector.
    pub nu_direct: Complex64,
    pub readout: ComplexReadout,
    pub reconstruction_error: f64,
    /// Field amplitude after undoing the preparation success amplitude.
    pub field_amplitude: Complex64,
    pub field_exact: Complex64,
    pub amplitude_estimate: AmplitudeEstimate,
}

pub fn cmd_readout_demo(cfg: &ExperimentConfig) -> Result<(ReadoutDemo, PathBuf), CliError> {
    let physics = cfg.physics.landau()?;
    let n_v = physics.grid.n_qubits();
    let n = physics.grid.n_points;
    let layout = RegisterLayout::with_extra(n_v, 1);
    let x0 = initial_state(&physics)?;
    let prep = prepare_state(&x0, &RegisterLayout::new(n_v))?;
    let (prep_c, _) = prep_circuit(&x0, &layout)?;

    let enc = compute_encoding(&physics)?;
    let be = BlockEncoding::new(&enc, layout)?;
    let sched = compute_phase_schedule(physics.t / enc.beta, physics.epsilon)?;
    let mut run = prep_c;
    run.extend(&build_c_hat(&be.u(), &layout, &sched));

    let target = layout.good_index(n);
    let mut st = StateVector::zero(layout);
    run.apply(&mut st).map_err(|e| CliError::Invariant(e.to_string()))?;
    let nu_direct = st.amplitudes[target];

    let d = ZETAS
        .iter()
        .map(|&z| phase_retrieval(&run, &layout, target, z))
        .collect::<Result<Vec<f64>, _>>()?;
    let readout = ComplexReadout::from_magnitudes(d[0], d[1], d[2]);
    let reconstruction_error = (readout.nu - nu_direct).norm();
    if reconstruction_error > 1e-10 {
        return Err(CliError::Invariant(format!("phase retrieval off by {reconstruction_error:.3e}")));
    }
    let h = build_hamiltonian(&physics)?;
    let exact = vlasim_oracle::exact_evolve(&h, &x0, physics.t)?;
    let amplitude_estimate = AmplitudeEstimate::new(d[0] * d[0], cfg.ae_iterations)?.with_sampling(cfg.seed)?;
    let demo = ReadoutDemo {
        prep: prep.summary(),
        nu_direct,
        readout,
        reconstruction_error,
        field_amplitude: readout.nu / prep.success_probability.sqrt(),
        field_exact: exact[n],
        amplitude_estimate,
    };
    let path = write_json(&cfg.output_dir, "readout.json", &demo)?;
    Ok((demo, path))
}
