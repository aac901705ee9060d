// Copyright 2026 pulsed-qubit Contributors
// SPDX-License-Identifier: Apache-2.0

//! Drive parameters for a qubit under a rectangular laser pulse.

use crate::error::{Error, Result};

/// Pulse envelope. Only the rectangular window f(t) = 1 on [0, T], 0
/// outside, is supported; the closed-form propagators are derived for it.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Envelope {
    #[default]
    Rectangular,
}

/// Parameters of the driven qubit in the frame rotating at the laser
/// frequency.
///
/// `delta = omega_a - omega_l` is the atom-laser detuning and `lambda` is
/// the dimensionless strength of the counter-rotating correction. `lambda`
/// is kept as an independent knob rather than being derived from
/// `omega / omega_l`, mirroring how the first-order coefficients are
/// parameterized.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DriveConfig {
    /// Rabi frequency Omega (rad/time), >= 0. Zero is admitted for
    /// zero-drive oracle checks; the closed-form propagator additionally
    /// needs omega and delta not both zero.
    pub omega: f64,
    /// Detuning Delta (rad/time).
    pub delta: f64,
    /// Laser frequency omega_l (rad/time), > 0; sets the 2*omega_l
    /// counter-rotating oscillation.
    pub omega_l: f64,
    /// Counter-rotating strength, 0 <= lambda <= 0.5. The first-order
    /// expansion is meaningless beyond that and is rejected loudly.
    pub lambda: f64,
    /// Pulse duration T (time), > 0.
    pub pulse_duration: f64,
    pub envelope: Envelope,
}

impl DriveConfig {
    pub const MAX_LAMBDA: f64 = 0.5;

    pub fn new(
        omega: f64,
        delta: f64,
        omega_l: f64,
        lambda: f64,
        pulse_duration: f64,
    ) -> Result<Self> {
        let cfg = Self {
            omega,
            delta,
            omega_l,
            lambda,
            pulse_duration,
            envelope: Envelope::Rectangular,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let all_finite = self.omega.is_finite()
            && self.delta.is_finite()
            && self.omega_l.is_finite()
            && self.lambda.is_finite()
            && self.pulse_duration.is_finite();
        if !all_finite {
            return Err(Error::InvalidConfig("non-finite parameter".into()));
        }
        if self.omega < 0.0 {
            return Err(Error::InvalidConfig(format!(
                "omega = {} must be >= 0",
                self.omega
            )));
        }
        if self.omega_l <= 0.0 {
            return Err(Error::InvalidConfig(format!(
                "omega_l = {} must be > 0",
                self.omega_l
            )));
        }
        if self.pulse_duration <= 0.0 {
            return Err(Error::InvalidConfig(format!(
                "pulse_duration = {} must be > 0",
                self.pulse_duration
            )));
        }
        if !(0.0..=Self::MAX_LAMBDA).contains(&self.lambda) {
            return Err(Error::InvalidConfig(format!(
                "lambda = {} outside [0, {}]; the first-order expansion in lambda does not hold",
                self.lambda,
                Self::MAX_LAMBDA
            )));
        }
        Ok(())
    }

    /// Generalized Rabi frequency Omega_1 = sqrt(Omega^2 + Delta^2).
    ///
    /// `hypot` keeps Omega_1 == Omega exact at Delta = 0, which the
    /// reduction law relies on.
    pub fn generalized_rabi(&self) -> f64 {
        self.omega.hypot(self.delta)
    }

    /// Atomic transition frequency implied by the detuning.
    pub fn omega_a(&self) -> f64 {
        self.delta + self.omega_l
    }

    /// Whether t lies inside the pulse window [0, T].
    pub fn contains(&self, t: f64) -> bool {
        t.is_finite() && (0.0..=self.pulse_duration).contains(&t)
    }
}
