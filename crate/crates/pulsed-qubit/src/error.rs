// Copyright 2026 pulsed-qubit Contributors
// SPDX-License-Identifier: Apache-2.0

//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by state construction, propagators, the oracle
/// integrator, and the run harness.
#[derive(Debug, Error)]
pub enum Error {
    /// Bloch vector norm exceeds 1 beyond the admitted slack; the matching
    /// density matrix would have a negative eigenvalue.
    #[error("non-physical state: Bloch norm {norm} exceeds 1")]
    NonPhysicalState { norm: f64 },

    /// Bloch norm below the degeneracy floor; the eigenbasis of the density
    /// matrix is not defined.
    #[error("degenerate state: Bloch norm {norm} is below {floor}; eigenbasis undefined")]
    DegenerateState { norm: f64, floor: f64 },

    /// A 2x2 matrix failed the density-matrix checks (hermiticity, unit
    /// trace, positivity).
    #[error("invalid density matrix: {0}")]
    InvalidDensity(String),

    /// Polar angle outside [0, pi] or a non-finite angle.
    #[error("invalid state angles: theta = {theta} (need 0 <= theta <= pi and finite phi)")]
    InvalidAngles { theta: f64 },

    /// Drive parameters violate the configuration invariants.
    #[error("invalid drive configuration: {0}")]
    InvalidConfig(String),

    /// The first-order iterative propagator is only derived at exact
    /// resonance.
    #[error("iterative propagator requires exact resonance, got delta = {delta}")]
    RequiresResonance { delta: f64 },

    /// Requested time lies outside the rectangular pulse.
    #[error("time {t} outside the pulse interval [0, {pulse_duration}]")]
    OutOfPulse { t: f64, pulse_duration: f64 },

    /// Integrator step too coarse to resolve the fastest drive oscillation.
    #[error("step {dt} too large for the counter-rotating terms; need dt <= {max_dt}")]
    StepTooLarge { dt: f64, max_dt: f64 },

    /// Time grid is empty, non-finite, or not strictly increasing.
    #[error("invalid time grid: {0}")]
    InvalidGrid(String),

    /// A run specification that cannot be executed as requested.
    #[error("invalid run spec: {0}")]
    InvalidSpec(String),

    /// A CSV document that the plotter cannot interpret.
    #[error("malformed CSV: {0}")]
    MalformedCsv(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
