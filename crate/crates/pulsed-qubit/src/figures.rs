// Copyright 2026 pulsed-qubit Contributors
// SPDX-License-Identifier: Apache-2.0

//! Built-in figure presets.
//!
//! Each preset fixes a scheme, a time grid in scaled time tau = Omega t, a
//! list of measures, and one or more parameter variants (the curves of the
//! figure). Panels ending in `a`/`b` follow the usual split: for fig1-fig4
//! the `a` panel is the transfer fidelity and the `b` panel the exchange
//! information; fig5 shows fidelity in both panels (theta sweep vs phi
//! sweep); fig6 and fig7 plot the eigenbasis overlap amplitudes |Sp_ij|
//! within and outside the rotating wave approximation respectively.
//!
//! All presets set Omega = omega_l = 1, so tau and t coincide and lambda is
//! swept as an independent knob. The pulse duration is tied to the end of
//! the grid, so presets never run past the pulse.

use std::f64::consts::PI;

use crate::drive::DriveConfig;
use crate::measures::{ExchangeMode, MeasureKind};
use crate::propagator::Scheme;
use crate::state::StateAngles;

/// One curve of a figure: a fully resolved parameter set plus the label
/// that distinguishes it in CSV column names and plot legends.
#[derive(Debug, Clone)]
pub struct FigureVariant {
    /// `None` for single-curve presets; otherwise e.g. "phi=pi/3".
    pub label: Option<String>,
    pub config: DriveConfig,
    pub state: StateAngles,
}

/// A named, fully specified figure computation.
#[derive(Debug, Clone)]
pub struct FigurePreset {
    pub id: &'static str,
    /// Human-readable summary printed by `figure --list`.
    pub caption: &'static str,
    pub scheme: Scheme,
    pub measures: Vec<MeasureKind>,
    pub exchange_mode: ExchangeMode,
    pub tau_start: f64,
    pub tau_end: f64,
    pub n_points: usize,
    pub variants: Vec<FigureVariant>,
}

impl FigurePreset {
    /// CSV column name for one (measure, variant) pair, e.g.
    /// `fidelity[phi=pi/2]` or plain `overlap11` for unlabeled variants.
    pub fn column_name(kind: MeasureKind, label: Option<&str>) -> String {
        match label {
            Some(l) => format!("{}[{}]", kind.token(), l),
            None => kind.token(),
        }
    }
}

/// Grid defaults: short window for the fidelity/exchange figures, long
/// window for the orthogonality figures (their discussion reaches tau ~ 30).
const SHORT_TAU_END: f64 = 15.0;
const LONG_TAU_END: f64 = 50.0;
const N_POINTS: usize = 2001;

const ALL_OVERLAPS: [MeasureKind; 4] = [
    MeasureKind::Overlap(1, 1),
    MeasureKind::Overlap(1, 2),
    MeasureKind::Overlap(2, 1),
    MeasureKind::Overlap(2, 2),
];

/// Identifiers of every built-in preset, in presentation order.
pub const PRESET_IDS: [&str; 20] = [
    "fig1a",
    "fig1b",
    "fig2a",
    "fig2b",
    "fig3a",
    "fig3b",
    "fig4a",
    "fig4b",
    "fig5a",
    "fig5b",
    "fig6a",
    "fig6b",
    "fig6c",
    "fig6d",
    "fig7a",
    "fig7b",
    "fig7c",
    "fig7d",
    "fig1a-excited",
    "fig6a-excited",
];

fn cfg(delta: f64, lambda: f64, tau_end: f64) -> DriveConfig {
    // Omega = omega_l = 1; pulse lasts exactly to the end of the grid.
    DriveConfig::new(1.0, delta, 1.0, lambda, tau_end)
        .expect("preset drive parameters are valid by construction")
}

fn angles(theta: f64, phi: f64) -> StateAngles {
    StateAngles::new(theta, phi).expect("preset angles are valid by construction")
}

fn variant(label: &str, config: DriveConfig, state: StateAngles) -> FigureVariant {
    FigureVariant {
        label: Some(label.to_string()),
        config,
        state,
    }
}

fn single(config: DriveConfig, state: StateAngles) -> Vec<FigureVariant> {
    vec![FigureVariant {
        label: None,
        config,
        state,
    }]
}

/// Three-way phase sweep shared by fig1a/fig1b: theta = pi/2, Delta = 0,
/// lambda = 0, phi in {pi/2, pi/3, pi/4}.
fn fig1_variants() -> Vec<FigureVariant> {
    let c = cfg(0.0, 0.0, SHORT_TAU_END);
    vec![
        variant("phi=pi/2", c, angles(PI / 2.0, PI / 2.0)),
        variant("phi=pi/3", c, angles(PI / 2.0, PI / 3.0)),
        variant("phi=pi/4", c, angles(PI / 2.0, PI / 4.0)),
    ]
}

/// fig2a/fig2b: fixed phi = pi/4, theta in {pi/3, pi/4, pi/6}.
fn fig2_variants() -> Vec<FigureVariant> {
    let c = cfg(0.0, 0.0, SHORT_TAU_END);
    vec![
        variant("theta=pi/3", c, angles(PI / 3.0, PI / 4.0)),
        variant("theta=pi/4", c, angles(PI / 4.0, PI / 4.0)),
        variant("theta=pi/6", c, angles(PI / 6.0, PI / 4.0)),
    ]
}

/// fig3a/fig3b: theta = pi/3, phi = pi/4, detuning in {0.1, 0.5, 0.8}.
fn fig3_variants() -> Vec<FigureVariant> {
    let state = angles(PI / 3.0, PI / 4.0);
    vec![
        variant("delta=0.1", cfg(0.1, 0.0, SHORT_TAU_END), state),
        variant("delta=0.5", cfg(0.5, 0.0, SHORT_TAU_END), state),
        variant("delta=0.8", cfg(0.8, 0.0, SHORT_TAU_END), state),
    ]
}

/// fig4a/fig4b: outside RWA, theta = phi = pi/2, lambda in {0.01, 0.2, 0.4}.
fn fig4_variants() -> Vec<FigureVariant> {
    let state = angles(PI / 2.0, PI / 2.0);
    vec![
        variant("lambda=0.01", cfg(0.0, 0.01, SHORT_TAU_END), state),
        variant("lambda=0.2", cfg(0.0, 0.2, SHORT_TAU_END), state),
        variant("lambda=0.4", cfg(0.0, 0.4, SHORT_TAU_END), state),
    ]
}

fn fidelity_preset(
    id: &'static str,
    caption: &'static str,
    scheme: Scheme,
    tau_end: f64,
    variants: Vec<FigureVariant>,
) -> FigurePreset {
    FigurePreset {
        id,
        caption,
        scheme,
        measures: vec![MeasureKind::Fidelity],
        exchange_mode: ExchangeMode::default(),
        tau_start: 0.0,
        tau_end,
        n_points: N_POINTS,
        variants,
    }
}

fn exchange_preset(
    id: &'static str,
    caption: &'static str,
    scheme: Scheme,
    tau_end: f64,
    variants: Vec<FigureVariant>,
) -> FigurePreset {
    FigurePreset {
        measures: vec![MeasureKind::Exchange],
        ..fidelity_preset(id, caption, scheme, tau_end, variants)
    }
}

fn overlap_preset(
    id: &'static str,
    caption: &'static str,
    scheme: Scheme,
    variants: Vec<FigureVariant>,
) -> FigurePreset {
    FigurePreset {
        measures: ALL_OVERLAPS.to_vec(),
        ..fidelity_preset(id, caption, scheme, LONG_TAU_END, variants)
    }
}

/// Looks up a preset by identifier; `None` for unknown ids.
pub fn preset(id: &str) -> Option<FigurePreset> {
    let p = match id {
        "fig1a" => fidelity_preset(
            "fig1a",
            "Fidelity within RWA: theta=pi/2, Delta=0, phi in {pi/2, pi/3, pi/4}",
            Scheme::Rwa,
            SHORT_TAU_END,
            fig1_variants(),
        ),
        "fig1b" => exchange_preset(
            "fig1b",
            "Exchange information within RWA: theta=pi/2, Delta=0, phi in {pi/2, pi/3, pi/4}",
            Scheme::Rwa,
            SHORT_TAU_END,
            fig1_variants(),
        ),
        "fig2a" => fidelity_preset(
            "fig2a",
            "Fidelity within RWA: phi=pi/4, Delta=0, theta in {pi/3, pi/4, pi/6}",
            Scheme::Rwa,
            SHORT_TAU_END,
            fig2_variants(),
        ),
        "fig2b" => exchange_preset(
            "fig2b",
            "Exchange information within RWA: phi=pi/4, Delta=0, theta in {pi/3, pi/4, pi/6}",
            Scheme::Rwa,
            SHORT_TAU_END,
            fig2_variants(),
        ),
        "fig3a" => fidelity_preset(
            "fig3a",
            "Fidelity within RWA off resonance: theta=pi/3, phi=pi/4, Delta in {0.1, 0.5, 0.8}",
            Scheme::Rwa,
            SHORT_TAU_END,
            fig3_variants(),
        ),
        "fig3b" => exchange_preset(
            "fig3b",
            "Exchange information within RWA off resonance: theta=pi/3, phi=pi/4, Delta in {0.1, 0.5, 0.8}",
            Scheme::Rwa,
            SHORT_TAU_END,
            fig3_variants(),
        ),
        "fig4a" => fidelity_preset(
            "fig4a",
            "Fidelity outside RWA: theta=phi=pi/2, lambda in {0.01, 0.2, 0.4}",
            Scheme::NonRwa,
            SHORT_TAU_END,
            fig4_variants(),
        ),
        "fig4b" => exchange_preset(
            "fig4b",
            "Exchange information outside RWA: theta=phi=pi/2, lambda in {0.01, 0.2, 0.4}",
            Scheme::NonRwa,
            SHORT_TAU_END,
            fig4_variants(),
        ),
        "fig5a" => fidelity_preset(
            "fig5a",
            "Fidelity outside RWA (lambda=0.2): phi=pi/2, theta in {pi/2, pi/3, pi/4}",
            Scheme::NonRwa,
            SHORT_TAU_END,
            vec![
                variant(
                    "theta=pi/2",
                    cfg(0.0, 0.2, SHORT_TAU_END),
                    angles(PI / 2.0, PI / 2.0),
                ),
                variant(
                    "theta=pi/3",
                    cfg(0.0, 0.2, SHORT_TAU_END),
                    angles(PI / 3.0, PI / 2.0),
                ),
                variant(
                    "theta=pi/4",
                    cfg(0.0, 0.2, SHORT_TAU_END),
                    angles(PI / 4.0, PI / 2.0),
                ),
            ],
        ),
        "fig5b" => fidelity_preset(
            "fig5b",
            "Fidelity outside RWA (lambda=0.2): theta=pi/2, phi in {pi/2, pi/3, pi/4}",
            Scheme::NonRwa,
            SHORT_TAU_END,
            vec![
                variant(
                    "phi=pi/2",
                    cfg(0.0, 0.2, SHORT_TAU_END),
                    angles(PI / 2.0, PI / 2.0),
                ),
                variant(
                    "phi=pi/3",
                    cfg(0.0, 0.2, SHORT_TAU_END),
                    angles(PI / 2.0, PI / 3.0),
                ),
                variant(
                    "phi=pi/4",
                    cfg(0.0, 0.2, SHORT_TAU_END),
                    angles(PI / 2.0, PI / 4.0),
                ),
            ],
        ),
        "fig6a" => overlap_preset(
            "fig6a",
            "Orthogonality speed within RWA: theta=pi/2, phi=1e-3*pi, Delta=0",
            Scheme::Rwa,
            single(cfg(0.0, 0.0, LONG_TAU_END), angles(PI / 2.0, 1e-3 * PI)),
        ),
        "fig6b" => overlap_preset(
            "fig6b",
            "Orthogonality speed within RWA: theta=pi/2, phi=1e-1*pi, Delta=0",
            Scheme::Rwa,
            single(cfg(0.0, 0.0, LONG_TAU_END), angles(PI / 2.0, 1e-1 * PI)),
        ),
        "fig6c" => overlap_preset(
            "fig6c",
            "Orthogonality speed within RWA: theta=pi/4, phi=1e-3*pi, Delta=0",
            Scheme::Rwa,
            single(cfg(0.0, 0.0, LONG_TAU_END), angles(PI / 4.0, 1e-3 * PI)),
        ),
        "fig6d" => overlap_preset(
            "fig6d",
            "Orthogonality speed within RWA off resonance: theta=pi/2, phi=1e-3*pi, Delta=0.7",
            Scheme::Rwa,
            single(cfg(0.7, 0.0, LONG_TAU_END), angles(PI / 2.0, 1e-3 * PI)),
        ),
        "fig7a" => overlap_preset(
            "fig7a",
            "Orthogonality speed outside RWA: theta=pi/2, phi=pi/8, lambda=1e-4",
            Scheme::NonRwa,
            single(cfg(0.0, 1e-4, LONG_TAU_END), angles(PI / 2.0, PI / 8.0)),
        ),
        "fig7b" => overlap_preset(
            "fig7b",
            "Orthogonality speed outside RWA: theta=pi/2, phi=pi/8, lambda=0.08",
            Scheme::NonRwa,
            single(cfg(0.0, 0.08, LONG_TAU_END), angles(PI / 2.0, PI / 8.0)),
        ),
        "fig7c" => overlap_preset(
            "fig7c",
            "Orthogonality speed outside RWA: theta=pi/4, phi=pi/8, lambda=1e-4",
            Scheme::NonRwa,
            single(cfg(0.0, 1e-4, LONG_TAU_END), angles(PI / 4.0, PI / 8.0)),
        ),
        "fig7d" => overlap_preset(
            "fig7d",
            "Orthogonality speed outside RWA: theta=pi/4, phi=pi/4, lambda=1e-4",
            Scheme::NonRwa,
            single(cfg(0.0, 1e-4, LONG_TAU_END), angles(PI / 4.0, PI / 4.0)),
        ),
        // Alternative readings exposing the fully excited initial state
        // |1> (theta = pi). With theta = pi the phase phi is global, so a
        // single curve suffices. For this state the fidelity reaches 0 and
        // |Sp_11| vanishes exactly at tau = (2k+1) pi on resonance.
        "fig1a-excited" => fidelity_preset(
            "fig1a-excited",
            "Fidelity within RWA from the excited state: theta=pi, Delta=0",
            Scheme::Rwa,
            SHORT_TAU_END,
            single(cfg(0.0, 0.0, SHORT_TAU_END), angles(PI, PI / 2.0)),
        ),
        "fig6a-excited" => overlap_preset(
            "fig6a-excited",
            "Orthogonality speed within RWA from the excited state: theta=pi, Delta=0",
            Scheme::Rwa,
            single(cfg(0.0, 0.0, LONG_TAU_END), angles(PI, 1e-3 * PI)),
        ),
        _ => return None,
    };
    Some(p)
}

/// All built-in presets in presentation order.
pub fn all_presets() -> Vec<FigurePreset> {
    PRESET_IDS
        .iter()
        .map(|id| preset(id).expect("every listed id resolves"))
        .collect()
}
