// Copyright 2026 pulsed-qubit Contributors
// SPDX-License-Identifier: Apache-2.0

//! Run specifications: a validated bundle of scheme, drive, initial state,
//! scaled-time grid, and measures, turned into CSV artifacts.
//!
//! The public axis is scaled time tau = Omega * t; everything downstream
//! works in physical t. Closed-form schemes evaluate the propagator on the
//! grid directly; oracle schemes integrate the Bloch equations with a
//! conservative internal step and land exactly on each grid point, so the
//! artifact shape is identical across schemes.
//!
//! Figure variants are independent computations; they are assembled in a
//! fixed order, so output bytes do not depend on evaluation order.

use crate::csvio::CsvDocument;
use crate::drive::DriveConfig;
use crate::error::{Error, Result};
use crate::figures::{FigurePreset, FigureVariant};
use crate::measures::{measures_on_trajectory, ExchangeMode, MeasureKind};
use crate::oracle::{full_mode_step_limit, rk4_step, OracleMode};
use crate::propagator::{trajectory, Scheme, TimeGrid};
use crate::state::{BlochVector, StateAngles};

/// How to evolve: the two closed forms, or the numerical oracle with and
/// without the counter-rotating terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunScheme {
    Rwa,
    NonRwa,
    OracleFull,
    OracleRwa,
}

impl RunScheme {
    pub fn token(&self) -> &'static str {
        match self {
            RunScheme::Rwa => "rwa",
            RunScheme::NonRwa => "non-rwa",
            RunScheme::OracleFull => "oracle-full",
            RunScheme::OracleRwa => "oracle-rwa",
        }
    }

    pub fn from_token(s: &str) -> Option<Self> {
        match s {
            "rwa" => Some(RunScheme::Rwa),
            "non-rwa" => Some(RunScheme::NonRwa),
            "oracle-full" => Some(RunScheme::OracleFull),
            "oracle-rwa" => Some(RunScheme::OracleRwa),
            _ => None,
        }
    }
}

/// A fully specified evolution request on a scaled-time grid.
#[derive(Debug, Clone)]
pub struct RunSpec {
    pub scheme: RunScheme,
    pub config: DriveConfig,
    pub state: StateAngles,
    pub tau_start: f64,
    pub tau_end: f64,
    pub n_points: usize,
    pub measures: Vec<MeasureKind>,
    pub exchange_mode: ExchangeMode,
}

impl RunSpec {
    /// Checks every invariant; errors carry the reason.
    pub fn validate(&self) -> Result<()> {
        self.config.validate()?;
        if self.config.omega <= 0.0 {
            return Err(Error::InvalidSpec(
                "scaled time tau = Omega*t requires omega > 0".into(),
            ));
        }
        if self.n_points < 2 {
            return Err(Error::InvalidSpec(format!(
                "n_points = {} but a grid needs at least 2 points",
                self.n_points
            )));
        }
        if !self.tau_start.is_finite() || !self.tau_end.is_finite() {
            return Err(Error::InvalidSpec("non-finite tau bounds".into()));
        }
        if self.tau_start < 0.0 || self.tau_end <= self.tau_start {
            return Err(Error::InvalidSpec(format!(
                "tau range [{}, {}] must satisfy 0 <= start < end",
                self.tau_start, self.tau_end
            )));
        }
        // The last grid time must stay inside the pulse (tau_end <= Omega*T).
        let t_end = self.tau_end / self.config.omega;
        if t_end > self.config.pulse_duration {
            return Err(Error::InvalidSpec(format!(
                "tau_end = {} reaches t = {} beyond the pulse duration {}",
                self.tau_end, t_end, self.config.pulse_duration
            )));
        }
        if self.scheme == RunScheme::NonRwa && self.config.delta != 0.0 {
            return Err(Error::InvalidSpec(format!(
                "the first-order non-RWA propagator requires delta = 0, got {}",
                self.config.delta
            )));
        }
        if self.measures.is_empty() {
            return Err(Error::InvalidSpec("no measures requested".into()));
        }
        Ok(())
    }

    /// The scaled-time grid points of this spec.
    pub fn tau_grid(&self) -> Result<TimeGrid> {
        TimeGrid::linspace(self.tau_start, self.tau_end, self.n_points)
    }
}

/// Internal integration step for the oracle schemes: well under the
/// counter-rotating period in full mode, well under the Rabi period
/// otherwise. Falls back to the span for drives with no dynamics at all.
fn oracle_step(config: &DriveConfig, mode: OracleMode, span: f64) -> f64 {
    let h = match mode {
        OracleMode::Full => full_mode_step_limit(config),
        OracleMode::RwaOnly => {
            let rate = config.generalized_rabi();
            if rate > 0.0 {
                0.01 / rate
            } else {
                f64::INFINITY
            }
        }
    };
    if h.is_finite() {
        h
    } else {
        span.max(1e-3)
    }
}

/// Integrates the oracle from t = 0 and samples it exactly on `times`
/// (ascending physical times inside the pulse).
fn oracle_samples(
    config: &DriveConfig,
    u0: BlochVector,
    times: &[f64],
    mode: OracleMode,
) -> Result<Vec<(f64, BlochVector)>> {
    config.validate()?;
    let last = *times.last().expect("grid is non-empty");
    if !config.contains(last) {
        return Err(Error::OutOfPulse {
            t: last,
            pulse_duration: config.pulse_duration,
        });
    }
    let h = oracle_step(config, mode, last.max(1e-3));
    let mut u = u0;
    let mut t = 0.0;
    let mut out = Vec::with_capacity(times.len());
    for &target in times {
        // Whole steps of size h, then one partial step onto the target.
        while target - t > h * (1.0 + 1e-12) {
            u = rk4_step(config, mode, t, u, h);
            t += h;
        }
        let rem = target - t;
        if rem > 0.0 {
            u = rk4_step(config, mode, t, u, rem);
        }
        t = target;
        out.push((target, u));
    }
    Ok(out)
}

/// Evolves the spec and returns `(tau, u)` samples on the grid.
pub fn evolve(spec: &RunSpec) -> Result<Vec<(f64, BlochVector)>> {
    spec.validate()?;
    let tau = spec.tau_grid()?;
    let times: Vec<f64> = tau
        .points()
        .iter()
        .map(|&x| x / spec.config.omega)
        .collect();
    let u0 = spec.state.bloch();
    let samples = match spec.scheme {
        RunScheme::Rwa | RunScheme::NonRwa => {
            let scheme = if spec.scheme == RunScheme::Rwa {
                Scheme::Rwa
            } else {
                Scheme::NonRwa
            };
            let grid = TimeGrid::from_points(times)?;
            trajectory(&spec.config, u0, &grid, scheme)?
        }
        RunScheme::OracleFull => oracle_samples(&spec.config, u0, &times, OracleMode::Full)?,
        RunScheme::OracleRwa => oracle_samples(&spec.config, u0, &times, OracleMode::RwaOnly)?,
    };
    Ok(samples
        .into_iter()
        .zip(tau.points())
        .map(|((_, u), &tk)| (tk, u))
        .collect())
}

fn config_comments(doc: &mut CsvDocument, config: &DriveConfig, state: &StateAngles) {
    doc.push_comment(format!(
        "omega={} delta={} omega_l={} lambda={} pulse_duration={}",
        config.omega, config.delta, config.omega_l, config.lambda, config.pulse_duration
    ));
    doc.push_comment(format!("theta={} phi={}", state.theta, state.phi));
}

/// `evolve` artifact: `tau,ux,uy,uz`.
pub fn trajectory_csv(spec: &RunSpec) -> Result<CsvDocument> {
    let samples = evolve(spec)?;
    let mut doc = CsvDocument::new(
        ["tau", "ux", "uy", "uz"]
            .iter()
            .map(|s| s.to_string())
            .collect(),
    )?;
    doc.push_comment(format!("scheme={}", spec.scheme.token()));
    config_comments(&mut doc, &spec.config, &spec.state);
    for (tau, u) in samples {
        doc.push_row(vec![tau, u.x, u.y, u.z])?;
    }
    Ok(doc)
}

/// `measure` artifact: `tau,<measure>...` for the spec's measure list.
pub fn measures_csv(spec: &RunSpec) -> Result<CsvDocument> {
    let samples = evolve(spec)?;
    let table = measures_on_trajectory(
        spec.state.bloch(),
        &samples,
        &spec.measures,
        spec.exchange_mode,
    )?;
    let mut header = vec!["tau".to_string()];
    header.extend(spec.measures.iter().map(|m| m.token()));
    let mut doc = CsvDocument::new(header)?;
    doc.push_comment(format!("scheme={}", spec.scheme.token()));
    doc.push_comment(format!("exchange_mode={}", spec.exchange_mode.token()));
    config_comments(&mut doc, &spec.config, &spec.state);
    for (k, &tau) in table.times.iter().enumerate() {
        let mut row = vec![tau];
        for col in &table.columns {
            row.push(col.values[k]);
        }
        doc.push_row(row)?;
    }
    Ok(doc)
}

fn variant_spec(preset: &FigurePreset, v: &FigureVariant) -> RunSpec {
    RunSpec {
        scheme: match preset.scheme {
            Scheme::Rwa => RunScheme::Rwa,
            Scheme::NonRwa => RunScheme::NonRwa,
        },
        config: v.config,
        state: v.state,
        tau_start: preset.tau_start,
        tau_end: preset.tau_end,
        n_points: preset.n_points,
        measures: preset.measures.clone(),
        exchange_mode: preset.exchange_mode,
    }
}

/// `figure` artifact: one CSV with a `tau` column plus one column per
/// (variant x measure), labeled like `fidelity[phi=pi/3]`.
pub fn figure_csv(preset: &FigurePreset) -> Result<CsvDocument> {
    if preset.variants.is_empty() {
        return Err(Error::InvalidSpec(format!(
            "preset {} has no variants",
            preset.id
        )));
    }
    let mut header = vec!["tau".to_string()];
    for v in &preset.variants {
        for &m in &preset.measures {
            header.push(FigurePreset::column_name(m, v.label.as_deref()));
        }
    }
    let mut doc = CsvDocument::new(header)?;
    doc.push_comment(format!("preset={}", preset.id));
    doc.push_comment(preset.caption);
    doc.push_comment(format!(
        "scheme={}",
        match preset.scheme {
            Scheme::Rwa => "rwa",
            Scheme::NonRwa => "non-rwa",
        }
    ));
    doc.push_comment(format!("exchange_mode={}", preset.exchange_mode.token()));

    let mut tau_axis: Option<Vec<f64>> = None;
    let mut columns: Vec<Vec<f64>> = Vec::new();
    for v in &preset.variants {
        let spec = variant_spec(preset, v);
        spec.validate()?;
        let samples = evolve(&spec)?;
        let table = measures_on_trajectory(
            v.state.bloch(),
            &samples,
            &preset.measures,
            preset.exchange_mode,
        )?;
        if tau_axis.is_none() {
            tau_axis = Some(table.times.clone());
        }
        for col in table.columns {
            columns.push(col.values);
        }
    }
    let tau_axis = tau_axis.expect("at least one variant");
    for (k, &tau) in tau_axis.iter().enumerate() {
        let mut row = Vec::with_capacity(1 + columns.len());
        row.push(tau);
        for col in &columns {
            row.push(col[k]);
        }
        doc.push_row(row)?;
    }
    Ok(doc)
}
