// Copyright 2026 pulsed-qubit Contributors
// SPDX-License-Identifier: Apache-2.0

//! Self-validation: cross-checks of the closed forms against the numerical
//! oracle plus artifact-level guarantees, rendered as a pass/fail table.
//!
//! The checks that probe the closed forms go through a [`CheckSuite`] of
//! function pointers, so tests can inject a corrupted propagator and prove
//! the harness actually catches it; production callers use the default
//! suite wired to the real implementations.

use std::f64::consts::PI;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::drive::DriveConfig;
use crate::error::Result;
use crate::figures;
use crate::oracle::{integrate, IntegratorSpec, OracleMode};
use crate::propagator::{self, PropagatorMatrix};
use crate::run::figure_csv;
use crate::state::{BlochVector, StateAngles};

/// Validation depth.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    /// The core cross-checks; completes in a few seconds.
    Quick,
    /// Quick plus the lambda error-scaling sweep and artifact determinism.
    Full,
}

/// Propagator constructors under test, injectable for fault-injection
/// tests.
#[derive(Clone, Copy)]
pub struct CheckSuite {
    pub rwa_matrix: fn(&DriveConfig, f64) -> Result<PropagatorMatrix>,
    pub nonrwa_matrix: fn(&DriveConfig, f64) -> Result<PropagatorMatrix>,
}

impl Default for CheckSuite {
    fn default() -> Self {
        Self {
            rwa_matrix: propagator::rwa_matrix,
            nonrwa_matrix: propagator::nonrwa_matrix,
        }
    }
}

/// One row of the validation table.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    /// The measured error or statistic the check is judged on.
    pub measured: f64,
    /// The limit `measured` is compared against.
    pub limit: f64,
    /// Extra context (sweep tables, landmark positions, ...).
    pub note: String,
}

/// Outcome of a validation run.
#[derive(Debug, Clone)]
pub struct Report {
    pub level: Level,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Fixed-width table, one line per check, plus a summary line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<24} {:<6} {:>12}  {:>12}  note",
            "check", "status", "measured", "limit"
        );
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{:<24} {:<6} {:>12.4e}  {:>12.4e}  {}",
                c.name,
                if c.passed { "PASS" } else { "FAIL" },
                c.measured,
                c.limit,
                c.note
            );
        }
        let passed = self.checks.iter().filter(|c| c.passed).count();
        let _ = writeln!(
            out,
            "{}/{} checks passed ({})",
            passed,
            self.checks.len(),
            match self.level {
                Level::Quick => "quick",
                Level::Full => "full",
            }
        );
        out
    }
}

fn max_component_dev(a: BlochVector, b: BlochVector) -> f64 {
    (a.x - b.x)
        .abs()
        .max((a.y - b.y).abs())
        .max((a.z - b.z).abs())
}

/// Closed-form RWA evolution vs the RwaOnly oracle for one configuration.
fn rwa_vs_oracle(suite: &CheckSuite, name: &'static str, delta: f64) -> CheckResult {
    let run = || -> Result<f64> {
        let cfg = DriveConfig::new(1.0, delta, 1.0, 0.0, 20.0)?;
        let u0 = StateAngles::new(1.1, 0.7)?.bloch();
        let spec = IntegratorSpec::new(1e-3, OracleMode::RwaOnly, 15.0)?;
        let samples = integrate(&cfg, u0, &spec)?;
        let mut worst = 0.0f64;
        for (k, &(t, u_oracle)) in samples.iter().enumerate() {
            // Comparing every oracle step would be slow in debug builds;
            // every 100th sample still covers the full window densely.
            if k % 100 != 0 && t != 15.0 {
                continue;
            }
            let u_closed = (suite.rwa_matrix)(&cfg, t)?.apply(u0);
            worst = worst.max(max_component_dev(u_closed, u_oracle));
        }
        Ok(worst)
    };
    match run() {
        Ok(worst) => CheckResult {
            name,
            passed: worst <= 1e-7,
            measured: worst,
            limit: 1e-7,
            note: format!("Delta={delta}, t in [0,15], dt=1e-3"),
        },
        Err(e) => error_result(name, e),
    }
}

/// Orthogonality, unit determinant, and the fixed rotation axis of the RWA
/// propagator over random configurations.
fn rotation_identity(suite: &CheckSuite) -> CheckResult {
    let name = "rotation-identity";
    let run = || -> Result<f64> {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut worst = 0.0f64;
        for _ in 0..50 {
            let omega = rng.gen_range(0.1..10.0);
            let delta = rng.gen_range(-5.0..5.0);
            let cfg = DriveConfig::new(omega, delta, 1.0, 0.0, 1e6)?;
            let t = rng.gen_range(0.0..10.0 / omega);
            let m = (suite.rwa_matrix)(&cfg, t)?;
            // M^T M = I.
            let mt = m.transposed();
            let prod = mt.compose(&m);
            for i in 0..3 {
                for j in 0..3 {
                    let expect = if i == j { 1.0 } else { 0.0 };
                    worst = worst.max((prod.entry(i, j) - expect).abs());
                }
            }
            // det M = +1.
            worst = worst.max((m.determinant() - 1.0).abs());
            // The rotation axis (Omega, 0, Delta)/Omega_1 is fixed.
            let o1 = cfg.generalized_rabi();
            let axis = BlochVector::new(omega / o1, 0.0, delta / o1);
            worst = worst.max(max_component_dev(m.apply(axis), axis));
        }
        Ok(worst)
    };
    match run() {
        Ok(worst) => CheckResult {
            name,
            passed: worst <= 1e-12,
            measured: worst,
            limit: 1e-12,
            note: "orthogonality, det, fixed axis over 50 random configs".into(),
        },
        Err(e) => error_result(name, e),
    }
}

/// nonrwa_matrix(lambda = 0) must equal rwa_matrix at Delta = 0 exactly
/// (to the last bit, bounded here at 1e-15).
fn reduction_law(suite: &CheckSuite) -> CheckResult {
    let name = "reduction-law";
    let run = || -> Result<f64> {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut worst = 0.0f64;
        for _ in 0..25 {
            let omega = rng.gen_range(0.1..10.0);
            let omega_l = rng.gen_range(0.1..10.0);
            let cfg = DriveConfig::new(omega, 0.0, omega_l, 0.0, 1e6)?;
            let t = rng.gen_range(0.0..10.0 / omega);
            let a = (suite.nonrwa_matrix)(&cfg, t)?;
            let b = (suite.rwa_matrix)(&cfg, t)?;
            for i in 0..3 {
                for j in 0..3 {
                    worst = worst.max((a.entry(i, j) - b.entry(i, j)).abs());
                }
            }
        }
        Ok(worst)
    };
    match run() {
        Ok(worst) => CheckResult {
            name,
            passed: worst <= 1e-15,
            measured: worst,
            limit: 1e-15,
            note: "25 random (Omega, omega_l, t) at Delta=0".into(),
        },
        Err(e) => error_result(name, e),
    }
}

/// Maximum deviation between the first-order closed form and the full
/// oracle over t in [0, 15], with omega_l tied to Omega/lambda so the
/// expansion knob matches the drive it expands in.
fn nonrwa_deviation(suite: &CheckSuite, lambda: f64) -> Result<f64> {
    let omega_l = 1.0 / lambda;
    let cfg = DriveConfig::new(1.0, 0.0, omega_l, lambda, 20.0)?;
    let u0 = StateAngles::new(PI / 2.0, PI / 2.0)?.bloch();
    // A quarter of the full-mode step limit 0.01/omega_l = 0.01*lambda.
    let spec = IntegratorSpec::new(2.5e-3 * lambda, OracleMode::Full, 15.0)?;
    let samples = integrate(&cfg, u0, &spec)?;
    let stride = (samples.len() / 400).max(1);
    let mut worst = 0.0f64;
    for (k, &(t, u_oracle)) in samples.iter().enumerate() {
        if k % stride != 0 && t != 15.0 {
            continue;
        }
        let u_closed = (suite.nonrwa_matrix)(&cfg, t)?.apply(u0);
        worst = worst.max(max_component_dev(u_closed, u_oracle));
    }
    Ok(worst)
}

/// Single-point first-order accuracy check at lambda = 0.05.
fn nonrwa_vs_oracle(suite: &CheckSuite) -> CheckResult {
    let name = "nonrwa-vs-oracle";
    let lambda = 0.05;
    match nonrwa_deviation(suite, lambda) {
        Ok(worst) => CheckResult {
            name,
            passed: worst <= 10.0 * lambda,
            measured: worst,
            limit: 10.0 * lambda,
            note: format!("lambda={lambda}, omega_l=1/lambda, t in [0,15]"),
        },
        Err(e) => error_result(name, e),
    }
}

/// Fourth-order convergence of the oracle integrator: halving the step
/// shrinks the endpoint error by ~16.
fn rk4_order() -> CheckResult {
    let name = "rk4-convergence-order";
    let run = || -> Result<f64> {
        let cfg = DriveConfig::new(1.0, 0.0, 1.0, 0.0, 20.0)?;
        let u0 = StateAngles::new(1.0, 0.5)?.bloch();
        let endpoint = |dt: f64| -> Result<BlochVector> {
            let spec = IntegratorSpec::new(dt, OracleMode::Full, 10.0)?;
            Ok(integrate(&cfg, u0, &spec)?.last().expect("samples").1)
        };
        let reference = endpoint(0.005 / 8.0)?;
        let coarse = max_component_dev(endpoint(0.005)?, reference);
        let fine = max_component_dev(endpoint(0.0025)?, reference);
        Ok(coarse / fine)
    };
    match run() {
        Ok(ratio) => CheckResult {
            name,
            passed: (14.0..=18.0).contains(&ratio),
            measured: ratio,
            limit: 18.0,
            note: "error ratio under step halving, expected in [14, 18]".into(),
        },
        Err(e) => error_result(name, e),
    }
}

/// F(tau) = (1 + cos tau)/2 for theta = phi = pi/2 on resonance, with the
/// first zero at tau = pi.
fn fidelity_landmark(suite: &CheckSuite) -> CheckResult {
    let name = "fidelity-landmark";
    let run = || -> Result<(f64, f64, f64)> {
        let cfg = DriveConfig::new(1.0, 0.0, 1.0, 0.0, 20.0)?;
        let u0 = StateAngles::new(PI / 2.0, PI / 2.0)?.bloch();
        let mut worst = 0.0f64;
        let n = 2001;
        let step = 15.0 / (n - 1) as f64;
        // Grid point where F is smallest within the first dip: the first
        // zero of the fidelity.
        let mut first_zero = 0.0;
        let mut f_min = f64::INFINITY;
        for k in 0..n {
            let tau = step * k as f64;
            let u = (suite.rwa_matrix)(&cfg, tau)?.apply(u0);
            let f = (1.0 + u.dot(&u0)) / 2.0;
            worst = worst.max((f - (1.0 + tau.cos()) / 2.0).abs());
            if (2.0..4.0).contains(&tau) && f < f_min {
                f_min = f;
                first_zero = tau;
            }
        }
        Ok((worst, first_zero, step))
    };
    match run() {
        Ok((worst, first_zero, step)) => CheckResult {
            name,
            passed: worst <= 1e-10 && (first_zero - PI).abs() <= step + 1e-12,
            measured: worst,
            limit: 1e-10,
            note: format!(
                "first zero at tau={first_zero:.4} (analytic pi; a quoted reading of ~2.5 for this landmark contradicts F=(1+cos tau)/2 and is not matched)"
            ),
        },
        Err(e) => error_result(name, e),
    }
}

/// Full-level sweep: deviation decreases monotonically with lambda and is
/// bounded by C*lambda with C <= 10; the fitted order is reported.
fn lambda_sweep(suite: &CheckSuite) -> CheckResult {
    let name = "lambda-sweep";
    let lambdas = [0.01, 0.02, 0.04, 0.08];
    let run = || -> Result<(Vec<f64>, f64, f64)> {
        let mut devs = Vec::new();
        for &l in &lambdas {
            devs.push(nonrwa_deviation(suite, l)?);
        }
        let c = devs
            .iter()
            .zip(&lambdas)
            .map(|(d, l)| d / l)
            .fold(0.0f64, f64::max);
        // Least-squares slope of log(dev) vs log(lambda): the observed
        // convergence order.
        let xs: Vec<f64> = lambdas.iter().map(|l| l.ln()).collect();
        let ys: Vec<f64> = devs.iter().map(|d| d.ln()).collect();
        let n = xs.len() as f64;
        let mx = xs.iter().sum::<f64>() / n;
        let my = ys.iter().sum::<f64>() / n;
        let slope = xs
            .iter()
            .zip(&ys)
            .map(|(x, y)| (x - mx) * (y - my))
            .sum::<f64>()
            / xs.iter().map(|x| (x - mx) * (x - mx)).sum::<f64>();
        Ok((devs, c, slope))
    };
    match run() {
        Ok((devs, c, slope)) => {
            let monotone = devs.windows(2).all(|w| w[0] < w[1]);
            let mut note = String::from("dev(lambda):");
            for (d, l) in devs.iter().zip(&lambdas) {
                let _ = write!(note, " {d:.3e}@{l}");
            }
            let _ = write!(
                note,
                "; fitted order {:.2} (closer to {}); omega_l=1/lambda",
                slope,
                if (slope - 1.0).abs() <= (slope - 2.0).abs() {
                    1
                } else {
                    2
                }
            );
            CheckResult {
                name,
                passed: monotone && c <= 10.0,
                measured: c,
                limit: 10.0,
                note,
            }
        }
        Err(e) => error_result(name, e),
    }
}

/// The fig1a artifact must render byte-identically across runs.
fn determinism() -> CheckResult {
    let name = "determinism";
    let run = || -> Result<bool> {
        let p = figures::preset("fig1a").expect("built-in preset");
        let a = figure_csv(&p)?.render();
        let b = figure_csv(&p)?.render();
        Ok(a == b)
    };
    match run() {
        Ok(same) => CheckResult {
            name,
            passed: same,
            measured: if same { 0.0 } else { 1.0 },
            limit: 0.0,
            note: "fig1a rendered twice, byte-compared".into(),
        },
        Err(e) => error_result(name, e),
    }
}

fn error_result(name: &'static str, e: crate::error::Error) -> CheckResult {
    CheckResult {
        name,
        passed: false,
        measured: f64::NAN,
        limit: 0.0,
        note: format!("check aborted: {e}"),
    }
}

/// Runs validation against the production implementations.
pub fn run_validation(level: Level) -> Report {
    run_validation_with(level, &CheckSuite::default())
}

/// Runs validation against an injected [`CheckSuite`].
pub fn run_validation_with(level: Level, suite: &CheckSuite) -> Report {
    let mut checks = vec![
        rwa_vs_oracle(suite, "rwa-vs-oracle-resonant", 0.0),
        rwa_vs_oracle(suite, "rwa-vs-oracle-detuned", 0.7),
        rotation_identity(suite),
        reduction_law(suite),
        nonrwa_vs_oracle(suite),
        rk4_order(),
        fidelity_landmark(suite),
    ];
    if level == Level::Full {
        checks.push(lambda_sweep(suite));
        checks.push(determinism());
    }
    Report { level, checks }
}
