// Copyright 2026 pulsed-qubit Contributors
// SPDX-License-Identifier: Apache-2.0

//! Closed-form Bloch-vector propagators for the rectangular pulse.
//!
//! Within the RWA the propagator is exact at any detuning and equals the
//! SO(3) rotation by Omega_1 t about the unit axis (Omega, 0, Delta)/Omega_1.
//! Outside the RWA, the first-order iterative solution in the
//! counter-rotating strength lambda is available at exact resonance only.
//! That truncated matrix is not a rotation: it is the raw first-order
//! coefficient matrix, identity violations at t = 0 included, and no
//! renormalization is applied to its output.

use crate::drive::DriveConfig;
use crate::error::{Error, Result};
use crate::state::BlochVector;

/// A 3x3 real matrix acting on Bloch vectors, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PropagatorMatrix {
    m: [[f64; 3]; 3],
}

impl PropagatorMatrix {
    pub const fn from_rows(m: [[f64; 3]; 3]) -> Self {
        Self { m }
    }

    pub const fn identity() -> Self {
        Self::from_rows([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]])
    }

    pub fn entry(&self, row: usize, col: usize) -> f64 {
        self.m[row][col]
    }

    pub fn rows(&self) -> &[[f64; 3]; 3] {
        &self.m
    }

    /// u(t) = M u(0); exact matrix-vector arithmetic, no renormalization.
    pub fn apply(&self, u: BlochVector) -> BlochVector {
        let v = [u.x, u.y, u.z];
        let mut out = [0.0; 3];
        for (o, row) in out.iter_mut().zip(&self.m) {
            *o = row[0] * v[0] + row[1] * v[1] + row[2] * v[2];
        }
        BlochVector::new(out[0], out[1], out[2])
    }

    /// Matrix product self * rhs (apply rhs first, then self).
    pub fn compose(&self, rhs: &PropagatorMatrix) -> PropagatorMatrix {
        let mut out = [[0.0; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..3).map(|k| self.m[i][k] * rhs.m[k][j]).sum();
            }
        }
        Self::from_rows(out)
    }

    pub fn transposed(&self) -> PropagatorMatrix {
        let mut out = [[0.0; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = self.m[j][i];
            }
        }
        Self::from_rows(out)
    }

    pub fn determinant(&self) -> f64 {
        let m = &self.m;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }
}

fn check_pulse(cfg: &DriveConfig, t: f64) -> Result<()> {
    cfg.validate()?;
    if !cfg.contains(t) {
        return Err(Error::OutOfPulse {
            t,
            pulse_duration: cfg.pulse_duration,
        });
    }
    Ok(())
}

/// RWA propagator at any detuning: the nine coefficients of the exact
/// rotating-frame solution evaluated at t.
///
/// With w = Omega/Omega_1, d = Delta/Omega_1, c = cos(Omega_1 t),
/// s = sin(Omega_1 t):
///
/// ```text
///   [ (w^2 + (d^2+1) c + w^2 (1-c))/2    -d s     w d (1-c) ]
///   [            d s     (w^2 + (d^2+1) c - w^2 (1-c))/2    -w s ]
///   [      w d (1-c)      w s      w^2 c + d^2 ]
/// ```
///
/// The corner entry uses w^2 c + d^2 = w^2 [c + (Delta/Omega)^2], the same
/// coefficient written without the 0/0 at Omega = 0.
pub fn rwa_matrix(cfg: &DriveConfig, t: f64) -> Result<PropagatorMatrix> {
    check_pulse(cfg, t)?;
    let omega_1 = cfg.generalized_rabi();
    if omega_1 == 0.0 {
        return Err(Error::InvalidConfig(
            "omega and delta both zero: generalized Rabi frequency vanishes and the rotation \
             axis is undefined"
                .into(),
        ));
    }
    let w = cfg.omega / omega_1;
    let d = cfg.delta / omega_1;
    let (s, c) = (omega_1 * t).sin_cos();
    let alpha = [
        0.5 * (w * w + (d * d + 1.0) * c + w * w * (1.0 - c)),
        -d * s,
        w * d * (1.0 - c),
    ];
    let beta = [
        d * s,
        0.5 * (w * w + (d * d + 1.0) * c - w * w * (1.0 - c)),
        -w * s,
    ];
    let gamma = [w * d * (1.0 - c), w * s, w * w * c + d * d];
    Ok(PropagatorMatrix::from_rows([alpha, beta, gamma]))
}

/// First-order iterative propagator with the counter-rotating terms kept,
/// valid at exact resonance (delta = 0) only.
///
/// Coefficients are the printed first-order forms; the alpha_z frequency
/// ambiguity is resolved as cos(Omega t), making the z-column the exact
/// lambda -> 0 continuation of the resonant RWA column. Entries are affine
/// in lambda by construction.
pub fn nonrwa_matrix(cfg: &DriveConfig, t: f64) -> Result<PropagatorMatrix> {
    check_pulse(cfg, t)?;
    if cfg.delta != 0.0 {
        return Err(Error::RequiresResonance { delta: cfg.delta });
    }
    let lam = cfg.lambda;
    let (s2, c2) = (2.0 * cfg.omega_l * t).sin_cos();
    let (s, c) = (cfg.omega * t).sin_cos();
    let alpha = [
        1.0 + lam * ((2.0 - 0.25 * s2) * s + (1.0 - 0.25 * c2) * c),
        -(lam / 4.0) * ((1.0 - c2) * s - s2 * c),
        (lam / 2.0) * (c2 * c - 1.0),
    ];
    let beta = [
        (lam / 4.0) * ((1.0 - c2) * s + s2 * c),
        c - (lam / 4.0) * (s2 * s + (4.0 - c2) * c),
        -s - (lam / 2.0) * s2 * c,
    ];
    let gamma = [lam * (2.0 - c2 - c), s + lam * s2, c];
    Ok(PropagatorMatrix::from_rows([alpha, beta, gamma]))
}

/// Which closed-form propagator to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    Rwa,
    NonRwa,
}

/// Closed-form propagator at time t under the chosen scheme.
pub fn propagator(cfg: &DriveConfig, t: f64, scheme: Scheme) -> Result<PropagatorMatrix> {
    match scheme {
        Scheme::Rwa => rwa_matrix(cfg, t),
        Scheme::NonRwa => nonrwa_matrix(cfg, t),
    }
}

/// Strictly increasing sequence of sample times (physical time, not the
/// scaled tau = Omega t).
#[derive(Debug, Clone, PartialEq)]
pub struct TimeGrid {
    points: Vec<f64>,
}

impl TimeGrid {
    /// n evenly spaced points from start to end inclusive, n >= 2.
    pub fn linspace(start: f64, end: f64, n: usize) -> Result<Self> {
        if !start.is_finite() || !end.is_finite() {
            return Err(Error::InvalidGrid("non-finite endpoint".into()));
        }
        if n < 2 {
            return Err(Error::InvalidGrid(format!(
                "need at least 2 points, got {n}"
            )));
        }
        if end <= start {
            return Err(Error::InvalidGrid(format!(
                "end {end} must exceed start {start}"
            )));
        }
        let step = (end - start) / (n - 1) as f64;
        let mut points: Vec<f64> = (0..n).map(|i| start + step * i as f64).collect();
        // Hit the endpoint exactly regardless of rounding in the sum.
        points[n - 1] = end;
        Ok(Self { points })
    }

    /// Explicit sample times; must be finite and strictly increasing.
    pub fn from_points(points: Vec<f64>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidGrid("empty grid".into()));
        }
        if points.iter().any(|t| !t.is_finite()) {
            return Err(Error::InvalidGrid("non-finite point".into()));
        }
        if points.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidGrid(
                "points must be strictly increasing".into(),
            ));
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Evaluates the closed-form propagator pointwise over the grid.
///
/// Each sample is M(t) u0; errors of the underlying propagator (out of
/// pulse, off resonance for NonRwa) surface unchanged.
pub fn trajectory(
    cfg: &DriveConfig,
    u0: BlochVector,
    grid: &TimeGrid,
    scheme: Scheme,
) -> Result<Vec<(f64, BlochVector)>> {
    grid.points
        .iter()
        .map(|&t| Ok((t, propagator(cfg, t, scheme)?.apply(u0))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn resonant(omega: f64, lambda: f64, duration: f64) -> DriveConfig {
        DriveConfig::new(omega, 0.0, 1.0, lambda, duration).unwrap()
    }

    #[test]
    fn quarter_period_resonant_rotation_matches_frozen_rows() {
        // Delta = 0, Omega t = pi/2: rows ((1,0,0), (0,0,-1), (0,1,0)).
        let m = rwa_matrix(&resonant(1.0, 0.0, 10.0), PI / 2.0).unwrap();
        let expect = [[1.0, 0.0, 0.0], [0.0, 0.0, -1.0], [0.0, 1.0, 0.0]];
        for (i, row) in expect.iter().enumerate() {
            for (j, &want) in row.iter().enumerate() {
                assert_relative_eq!(m.entry(i, j), want, epsilon = 1e-15);
            }
        }
    }

    #[test]
    fn half_period_flips_the_equatorial_state() {
        // u(0) = (0,1,0), Omega t = pi -> (0,-1,0).
        let m = rwa_matrix(&resonant(1.0, 0.0, 10.0), PI).unwrap();
        let u = m.apply(BlochVector::new(0.0, 1.0, 0.0));
        assert_relative_eq!(u.x, 0.0, epsilon = 1e-15);
        assert_relative_eq!(u.y, -1.0, epsilon = 1e-15);
        assert_relative_eq!(u.z, 0.0, epsilon = 2e-16);
    }

    #[test]
    fn rwa_matrix_is_a_rotation_at_detuning() {
        let cfg = DriveConfig::new(1.3, -0.8, 5.0, 0.0, 50.0).unwrap();
        for &t in &[0.0, 0.7, 3.9, 17.2, 48.0] {
            let m = rwa_matrix(&cfg, t).unwrap();
            let mtm = m.transposed().compose(&m);
            let id = PropagatorMatrix::identity();
            for i in 0..3 {
                for j in 0..3 {
                    assert_relative_eq!(mtm.entry(i, j), id.entry(i, j), epsilon = 1e-13);
                }
            }
            assert_relative_eq!(m.determinant(), 1.0, epsilon = 1e-13);
        }
    }

    #[test]
    fn rwa_composes_like_a_one_parameter_group() {
        let cfg = DriveConfig::new(0.9, 1.7, 5.0, 0.0, 50.0).unwrap();
        let (t1, t2) = (1.3, 4.1);
        let lhs = rwa_matrix(&cfg, t1 + t2).unwrap();
        let rhs = rwa_matrix(&cfg, t1)
            .unwrap()
            .compose(&rwa_matrix(&cfg, t2).unwrap());
        for i in 0..3 {
            for j in 0..3 {
                assert_relative_eq!(lhs.entry(i, j), rhs.entry(i, j), epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn rwa_period_is_two_pi_over_generalized_rabi() {
        let cfg = DriveConfig::new(1.0, 0.6, 5.0, 0.0, 100.0).unwrap();
        let period = 2.0 * PI / cfg.generalized_rabi();
        for &t in &[0.4, 2.2, 9.0] {
            let a = rwa_matrix(&cfg, t).unwrap();
            let b = rwa_matrix(&cfg, t + period).unwrap();
            for i in 0..3 {
                for j in 0..3 {
                    assert_relative_eq!(a.entry(i, j), b.entry(i, j), epsilon = 1e-12);
                }
            }
        }
    }

    #[test]
    fn pure_detuning_precesses_about_z() {
        // Omega = 0, Delta != 0 is the Omega_1 = |Delta| limit of the same
        // rotation; the corner entries must not hit a 0/0.
        let cfg = DriveConfig::new(0.0, 0.5, 5.0, 0.0, 100.0).unwrap();
        let m = rwa_matrix(&cfg, 1.0).unwrap();
        let u = m.apply(BlochVector::new(1.0, 0.0, 0.0));
        assert_relative_eq!(u.x, (0.5f64).cos(), epsilon = 1e-15);
        assert_relative_eq!(u.y, (0.5f64).sin(), epsilon = 1e-15);
        assert_relative_eq!(u.z, 0.0, epsilon = 1e-15);
        assert_relative_eq!(m.entry(2, 2), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn fully_degenerate_axis_is_rejected() {
        let cfg = DriveConfig::new(0.0, 0.0, 5.0, 0.0, 10.0).unwrap();
        assert!(matches!(
            rwa_matrix(&cfg, 1.0),
            Err(Error::InvalidConfig(_))
        ));
    }

    #[test]
    fn out_of_pulse_times_are_rejected() {
        let cfg = resonant(1.0, 0.0, 2.0);
        assert!(matches!(
            rwa_matrix(&cfg, 2.5),
            Err(Error::OutOfPulse { .. })
        ));
        assert!(matches!(
            rwa_matrix(&cfg, -0.1),
            Err(Error::OutOfPulse { .. })
        ));
        assert!(matches!(
            nonrwa_matrix(&cfg, 2.5),
            Err(Error::OutOfPulse { .. })
        ));
    }

    #[test]
    fn nonrwa_requires_resonance() {
        let cfg = DriveConfig::new(1.0, 0.1, 1.0, 0.2, 10.0).unwrap();
        assert!(matches!(
            nonrwa_matrix(&cfg, 1.0),
            Err(Error::RequiresResonance { .. })
        ));
    }

    #[test]
    fn nonrwa_at_t_zero_matches_frozen_entries() {
        // M(0) = diag(1 + 3 lambda/4, 1 - 3 lambda/4, 1), off-diagonals 0:
        // the documented identity violation of the truncated expansion.
        let lam = 0.2;
        let m = nonrwa_matrix(&resonant(1.0, lam, 10.0), 0.0).unwrap();
        let expect = [
            [1.0 + 0.75 * lam, 0.0, 0.0],
            [0.0, 1.0 - 0.75 * lam, 0.0],
            [0.0, 0.0, 1.0],
        ];
        for (i, row) in expect.iter().enumerate() {
            for (j, &want) in row.iter().enumerate() {
                assert_relative_eq!(m.entry(i, j), want, epsilon = 1e-15);
            }
        }
    }

    #[test]
    fn nonrwa_reduces_to_resonant_rwa_at_lambda_zero() {
        let cfg = resonant(1.7, 0.0, 30.0);
        for &t in &[0.0, 0.3, 2.9, 11.0, 29.5] {
            let a = nonrwa_matrix(&cfg, t).unwrap();
            let b = rwa_matrix(&cfg, t).unwrap();
            for i in 0..3 {
                for j in 0..3 {
                    assert!(
                        (a.entry(i, j) - b.entry(i, j)).abs() <= 1e-15,
                        "entry ({i},{j}) at t={t}: {} vs {}",
                        a.entry(i, j),
                        b.entry(i, j)
                    );
                }
            }
        }
    }

    #[test]
    fn nonrwa_entries_are_affine_in_lambda() {
        // Three-point collinearity: M(0.1) = (M(0) + M(0.2))/2 entrywise.
        let t = 3.7;
        let m0 = nonrwa_matrix(&resonant(1.0, 0.0, 10.0), t).unwrap();
        let m1 = nonrwa_matrix(&resonant(1.0, 0.1, 10.0), t).unwrap();
        let m2 = nonrwa_matrix(&resonant(1.0, 0.2, 10.0), t).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let mid = 0.5 * (m0.entry(i, j) + m2.entry(i, j));
                assert_relative_eq!(m1.entry(i, j), mid, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn linspace_endpoints_are_exact() {
        let g = TimeGrid::linspace(0.0, 15.0, 2001).unwrap();
        assert_eq!(g.len(), 2001);
        assert_eq!(g.points()[0], 0.0);
        assert_eq!(g.points()[2000], 15.0);
        assert!(TimeGrid::linspace(0.0, 0.0, 5).is_err());
        assert!(TimeGrid::linspace(0.0, 1.0, 1).is_err());
    }

    #[test]
    fn from_points_requires_strict_increase() {
        assert!(TimeGrid::from_points(vec![0.0]).is_ok());
        assert!(TimeGrid::from_points(vec![0.0, 0.0]).is_err());
        assert!(TimeGrid::from_points(vec![]).is_err());
        assert!(TimeGrid::from_points(vec![0.0, f64::NAN]).is_err());
    }

    #[test]
    fn single_point_trajectory_at_zero_is_the_initial_state_under_rwa() {
        let cfg = resonant(1.0, 0.0, 10.0);
        let grid = TimeGrid::from_points(vec![0.0]).unwrap();
        let u0 = BlochVector::new(0.3, -0.4, 0.5);
        let traj = trajectory(&cfg, u0, &grid, Scheme::Rwa).unwrap();
        assert_eq!(traj.len(), 1);
        assert_relative_eq!(traj[0].1.x, u0.x, epsilon = 1e-15);
        assert_relative_eq!(traj[0].1.y, u0.y, epsilon = 1e-15);
        assert_relative_eq!(traj[0].1.z, u0.z, epsilon = 1e-15);
    }
}
