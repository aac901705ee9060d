// Copyright 2026 pulsed-qubit Contributors
// SPDX-License-Identifier: Apache-2.0

//! Fixed-step RK4 integration of the rotating-frame Bloch equations.
//!
//! This is the numerical reference the closed forms are validated against,
//! so it deliberately shares no code with the propagator module: the
//! right-hand side is written straight from the equation of motion, either
//! with the counter-rotating e^{±2 i omega_l t} terms kept (`Full`) or
//! dropped (`RwaOnly`).
//!
//! The generator is antisymmetric in both modes, so the exact flow
//! preserves the Bloch norm; residual drift measures integrator error.

use crate::drive::DriveConfig;
use crate::error::{Error, Result};
use crate::state::BlochVector;

/// Whether the counter-rotating terms are kept in the equations of motion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleMode {
    /// Keep the 2 omega_l t driving terms exactly as in the rotating-frame
    /// equation of motion.
    Full,
    /// Drop them; integrates the same dynamics the RWA closed form solves.
    RwaOnly,
}

/// Integration request: fixed step dt, mode, and final time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegratorSpec {
    pub dt: f64,
    pub mode: OracleMode,
    pub t_end: f64,
}

impl IntegratorSpec {
    pub fn new(dt: f64, mode: OracleMode, t_end: f64) -> Result<Self> {
        if !dt.is_finite() || dt <= 0.0 {
            return Err(Error::InvalidSpec(format!(
                "dt = {dt} must be finite and > 0"
            )));
        }
        if !t_end.is_finite() || t_end < 0.0 {
            return Err(Error::InvalidSpec(format!(
                "t_end = {t_end} must be finite and >= 0"
            )));
        }
        Ok(Self { dt, mode, t_end })
    }
}

/// Largest step that still resolves the fast oscillations in `Full` mode:
/// min(0.01/Omega, 0.01/omega_l). Unbounded contributions (Omega = 0) drop
/// out of the min.
pub fn full_mode_step_limit(cfg: &DriveConfig) -> f64 {
    (0.01 / cfg.omega).min(0.01 / cfg.omega_l)
}

/// Time derivative of the Bloch vector at (u, t).
///
/// Full mode:
/// ```text
///   du_x = -Delta u_y - Omega sin(2 omega_l t) u_z
///   du_y =  Delta u_x - Omega (1 + cos(2 omega_l t)) u_z
///   du_z =  Omega sin(2 omega_l t) u_x + Omega (1 + cos(2 omega_l t)) u_y
/// ```
/// RwaOnly replaces the oscillating factors by their averages (0 and 1).
pub fn bloch_rhs(u: BlochVector, t: f64, cfg: &DriveConfig, mode: OracleMode) -> BlochVector {
    debug_assert!(cfg.contains(t), "rhs sampled outside the pulse");
    let (s, c) = match mode {
        OracleMode::Full => {
            let (s2, c2) = (2.0 * cfg.omega_l * t).sin_cos();
            (cfg.omega * s2, cfg.omega * (1.0 + c2))
        }
        OracleMode::RwaOnly => (0.0, cfg.omega),
    };
    BlochVector::new(
        -cfg.delta * u.y - s * u.z,
        cfg.delta * u.x - c * u.z,
        s * u.x + c * u.y,
    )
}

pub(crate) fn rk4_step(
    cfg: &DriveConfig,
    mode: OracleMode,
    t: f64,
    u: BlochVector,
    h: f64,
) -> BlochVector {
    let k1 = bloch_rhs(u, t, cfg, mode);
    let k2 = bloch_rhs(offset(u, k1, h / 2.0), t + h / 2.0, cfg, mode);
    let k3 = bloch_rhs(offset(u, k2, h / 2.0), t + h / 2.0, cfg, mode);
    let k4 = bloch_rhs(offset(u, k3, h), t + h, cfg, mode);
    BlochVector::new(
        u.x + h / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x),
        u.y + h / 6.0 * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y),
        u.z + h / 6.0 * (k1.z + 2.0 * k2.z + 2.0 * k3.z + k4.z),
    )
}

fn offset(u: BlochVector, k: BlochVector, h: f64) -> BlochVector {
    BlochVector::new(u.x + h * k.x, u.y + h * k.y, u.z + h * k.z)
}

/// Integrates u' = f(u, t) from 0 to `spec.t_end`, sampling after every
/// step plus a final partial step onto t_end.
///
/// In `Full` mode the step must satisfy [`full_mode_step_limit`]; an
/// under-resolved counter-rotating oscillation is an error, not a warning.
pub fn integrate(
    cfg: &DriveConfig,
    u0: BlochVector,
    spec: &IntegratorSpec,
) -> Result<Vec<(f64, BlochVector)>> {
    cfg.validate()?;
    if spec.t_end > cfg.pulse_duration {
        return Err(Error::OutOfPulse {
            t: spec.t_end,
            pulse_duration: cfg.pulse_duration,
        });
    }
    if spec.mode == OracleMode::Full {
        let max_dt = full_mode_step_limit(cfg);
        if spec.dt > max_dt {
            return Err(Error::StepTooLarge {
                dt: spec.dt,
                max_dt,
            });
        }
    }
    // Number of whole steps; the 1e-9 slack keeps an exact multiple from
    // losing its last step to rounding in the division.
    let n = ((spec.t_end / spec.dt) + 1e-9).floor() as u64;
    let mut samples = Vec::with_capacity(n as usize + 2);
    let mut u = u0;
    samples.push((0.0, u));
    for k in 1..=n {
        let t_prev = (k - 1) as f64 * spec.dt;
        u = rk4_step(cfg, spec.mode, t_prev, u, spec.dt);
        samples.push((k as f64 * spec.dt, u));
    }
    let t_n = n as f64 * spec.dt;
    if spec.t_end - t_n > 0.0 {
        u = rk4_step(cfg, spec.mode, t_n, u, spec.t_end - t_n);
        samples.push((spec.t_end, u));
    } else if n > 0 {
        // n*dt may overshoot t_end by at most 1e-9*dt; report the endpoint.
        samples.last_mut().expect("non-empty").0 = spec.t_end;
    }
    Ok(samples)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn cfg(omega: f64, delta: f64, omega_l: f64) -> DriveConfig {
        DriveConfig::new(omega, delta, omega_l, 0.0, 100.0).unwrap()
    }

    #[test]
    fn rhs_matches_frozen_value_at_t_zero() {
        // Full, t = 0, Delta = 0, u = (0,0,1): du = (0, -2 Omega, 0); the
        // counter-rotating term doubles the RWA torque at t = 0.
        let c = cfg(0.7, 0.0, 3.0);
        let du = bloch_rhs(BlochVector::new(0.0, 0.0, 1.0), 0.0, &c, OracleMode::Full);
        assert_relative_eq!(du.x, 0.0);
        assert_relative_eq!(du.y, -1.4);
        assert_relative_eq!(du.z, 0.0);
        let du_rwa = bloch_rhs(
            BlochVector::new(0.0, 0.0, 1.0),
            0.0,
            &c,
            OracleMode::RwaOnly,
        );
        assert_relative_eq!(du_rwa.y, -0.7);
    }

    #[test]
    fn generator_is_antisymmetric() {
        // u . du = 0 for any u, t, mode: the flow preserves the norm.
        let c = cfg(1.3, -0.4, 2.0);
        for &(x, y, z) in &[(1.0, 0.0, 0.0), (0.2, -0.7, 0.4), (0.0, 0.3, -0.9)] {
            let u = BlochVector::new(x, y, z);
            for &t in &[0.0, 0.31, 2.7, 11.0] {
                for mode in [OracleMode::Full, OracleMode::RwaOnly] {
                    let du = bloch_rhs(u, t, &c, mode);
                    assert_relative_eq!(u.dot(&du), 0.0, epsilon = 1e-14);
                }
            }
        }
    }

    #[test]
    fn zero_drive_is_the_identity() {
        let c = DriveConfig::new(0.0, 0.0, 1.0, 0.0, 100.0).unwrap();
        let u0 = BlochVector::new(0.3, -0.5, 0.7);
        let spec = IntegratorSpec::new(0.005, OracleMode::Full, 50.0).unwrap();
        let samples = integrate(&c, u0, &spec).unwrap();
        for (_, u) in samples {
            assert_eq!(u, u0);
        }
    }

    #[test]
    fn norm_drift_stays_below_budget() {
        // |‖u(t)‖ - ‖u0‖| <= 1e-9 out to t = 20/Omega at the step limit.
        let c = cfg(1.0, 0.3, 4.0);
        let dt = full_mode_step_limit(&c);
        let u0 = BlochVector::new(0.6, 0.0, -0.8);
        let spec = IntegratorSpec::new(dt, OracleMode::Full, 20.0).unwrap();
        let samples = integrate(&c, u0, &spec).unwrap();
        let drift = samples
            .iter()
            .map(|(_, u)| (u.norm() - 1.0).abs())
            .fold(0.0, f64::max);
        assert!(drift < 1e-9, "norm drift {drift:e}");
    }

    #[test]
    fn partial_final_step_lands_on_t_end() {
        let c = cfg(1.0, 0.0, 1.0);
        let spec = IntegratorSpec::new(0.3, OracleMode::RwaOnly, 1.0).unwrap();
        let samples = integrate(&c, BlochVector::new(0.0, 1.0, 0.0), &spec).unwrap();
        assert_eq!(samples.len(), 5); // t = 0, 0.3, 0.6, 0.9, 1.0
        assert_eq!(samples.last().unwrap().0, 1.0);
        // Endpoint agrees with the closed form to the accuracy of four
        // coarse RK4 steps.
        let u = samples.last().unwrap().1;
        assert_relative_eq!(u.y, (1.0f64).cos(), epsilon = 1e-4);
        assert_relative_eq!(u.z, (1.0f64).sin(), epsilon = 1e-4);
    }

    #[test]
    fn exact_multiple_has_no_spurious_final_sample() {
        let c = cfg(1.0, 0.0, 1.0);
        let spec = IntegratorSpec::new(0.1, OracleMode::RwaOnly, 1.0).unwrap();
        let samples = integrate(&c, BlochVector::new(0.0, 1.0, 0.0), &spec).unwrap();
        assert_eq!(samples.len(), 11);
        assert_eq!(samples.last().unwrap().0, 1.0);
    }

    #[test]
    fn full_mode_rejects_coarse_steps() {
        let c = cfg(1.0, 0.0, 50.0);
        let spec = IntegratorSpec {
            dt: 0.01,
            mode: OracleMode::Full,
            t_end: 1.0,
        };
        assert!(matches!(
            integrate(&c, BlochVector::new(0.0, 1.0, 0.0), &spec),
            Err(Error::StepTooLarge { .. })
        ));
        // RwaOnly has no fast scale to resolve.
        let spec = IntegratorSpec {
            dt: 0.01,
            mode: OracleMode::RwaOnly,
            t_end: 1.0,
        };
        assert!(integrate(&c, BlochVector::new(0.0, 1.0, 0.0), &spec).is_ok());
    }

    #[test]
    fn t_end_beyond_pulse_is_rejected() {
        let c = DriveConfig::new(1.0, 0.0, 1.0, 0.0, 5.0).unwrap();
        let spec = IntegratorSpec::new(0.001, OracleMode::Full, 6.0).unwrap();
        assert!(matches!(
            integrate(&c, BlochVector::new(0.0, 1.0, 0.0), &spec),
            Err(Error::OutOfPulse { .. })
        ));
    }

    #[test]
    fn rk4_halving_shrinks_error_sixteen_fold() {
        // Quick sanity companion of the acceptance-level order check.
        let c = cfg(1.0, 0.0, 1.0);
        let u0 = BlochVector::new(0.0, 1.0, 0.0);
        let endpoint = |dt: f64| {
            let spec = IntegratorSpec::new(dt, OracleMode::Full, 10.0).unwrap();
            integrate(&c, u0, &spec).unwrap().last().unwrap().1
        };
        let reference = endpoint(0.005 / 8.0);
        let err = |u: BlochVector| {
            (u.x - reference.x)
                .abs()
                .max((u.y - reference.y).abs())
                .max((u.z - reference.z).abs())
        };
        let ratio = err(endpoint(0.005)) / err(endpoint(0.0025));
        assert!((14.0..=18.0).contains(&ratio), "order ratio {ratio}");
    }
}
