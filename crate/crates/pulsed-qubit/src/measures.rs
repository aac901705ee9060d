// Copyright 2026 pulsed-qubit Contributors
// SPDX-License-Identifier: Apache-2.0

//! Information measures along an evolution: transfer fidelity, exchange
//! information, and eigenbasis overlap amplitudes (orthogonality speed).
//!
//! All logarithms are natural; a log2 display conversion belongs to the
//! output layer, not here.

use num_complex::Complex64;

use crate::drive::DriveConfig;
use crate::error::Result;
use crate::propagator::{trajectory, Scheme, TimeGrid};
use crate::state::{BlochVector, QubitDensity};

/// Entropy functional used for the exchange information.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum ExchangeMode {
    /// Von Neumann entropy of the evolved state, -sum lambda_k ln lambda_k.
    /// Identically zero along any unitary (RWA) evolution.
    VonNeumann,
    /// -F ln F with F the transfer fidelity.
    FidelityXlnX,
    /// Binary entropy -F ln F - (1-F) ln(1-F); vanishes at both F = 0 and
    /// F = 1, matching "no information exchanged" at perfect transfer or
    /// perfect return.
    #[default]
    FidelityBinary,
}

impl ExchangeMode {
    /// Stable token used by the CLI and in CSV metadata.
    pub fn token(&self) -> &'static str {
        match self {
            ExchangeMode::VonNeumann => "von-neumann",
            ExchangeMode::FidelityXlnX => "fidelity-xlnx",
            ExchangeMode::FidelityBinary => "fidelity-binary",
        }
    }

    pub fn from_token(s: &str) -> Option<Self> {
        match s {
            "von-neumann" => Some(ExchangeMode::VonNeumann),
            "fidelity-xlnx" => Some(ExchangeMode::FidelityXlnX),
            "fidelity-binary" => Some(ExchangeMode::FidelityBinary),
            _ => None,
        }
    }
}

/// Transfer fidelity F = tr(rho(t) rho(0)); for Bloch vectors this is
/// (1 + u(t) . u(0))/2. Clamped to [0, 1] against rounding.
pub fn fidelity(rho0: &QubitDensity, rhot: &QubitDensity) -> f64 {
    let mut f = 0.0;
    for i in 0..2 {
        for j in 0..2 {
            f += (rho0.entry(i, j) * rhot.entry(j, i)).re;
        }
    }
    f.clamp(0.0, 1.0)
}

/// x ln x extended by continuity to 0 at x = 0; tiny negative eigenvalues
/// admitted by the positivity slack contribute nothing.
fn xlnx(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        x * x.ln()
    }
}

/// Exchange information of the evolved state relative to the initial one,
/// under the chosen entropy functional. Natural log; ranges are [0, ln 2]
/// for `VonNeumann` and `FidelityBinary`, [0, 1/e] for `FidelityXlnX`.
pub fn exchange_information(rho0: &QubitDensity, rhot: &QubitDensity, mode: ExchangeMode) -> f64 {
    match mode {
        ExchangeMode::VonNeumann => {
            // Closed-form spectrum (1 ± |u|)/2; the norm is capped at 1 so
            // the slack admitted by clamped construction cannot push an
            // eigenvalue outside the entropy domain.
            let r = rhot.bloch().norm().min(1.0);
            -xlnx((1.0 + r) / 2.0) - xlnx((1.0 - r) / 2.0)
        }
        ExchangeMode::FidelityXlnX => -xlnx(fidelity(rho0, rhot)),
        ExchangeMode::FidelityBinary => {
            let f = fidelity(rho0, rhot);
            -xlnx(f) - xlnx(1.0 - f)
        }
    }
}

/// Overlap amplitudes Sp[i][j] = <v_i(0) | v_j(t)> between the initial and
/// evolved eigenbases, rows and columns ordered by descending eigenvalue.
#[derive(Debug, Clone, Copy)]
pub struct OverlapMatrix {
    amps: [[Complex64; 2]; 2],
}

impl OverlapMatrix {
    /// Amplitude with 1-based indices (i, j) in {1, 2}, matching the
    /// Sp_11 naming used for the leading component.
    pub fn amplitude(&self, i: usize, j: usize) -> Complex64 {
        self.amps[i - 1][j - 1]
    }

    pub fn abs(&self, i: usize, j: usize) -> f64 {
        self.amplitude(i, j).norm()
    }
}

/// Eigenbasis overlaps between rho(0) and rho(t).
///
/// Both states must be non-degenerate (Bloch norm >= the degeneracy floor);
/// global eigenvector phases cancel in |Sp_ij|, which is what the figures
/// plot.
pub fn orthogonality_overlaps(rho0: &QubitDensity, rhot: &QubitDensity) -> Result<OverlapMatrix> {
    let e0 = rho0.eigensystem()?;
    let et = rhot.eigensystem()?;
    let mut amps = [[Complex64::new(0.0, 0.0); 2]; 2];
    for (i, vi) in e0.vectors.iter().enumerate() {
        for (j, vj) in et.vectors.iter().enumerate() {
            amps[i][j] = vi[0].conj() * vj[0] + vi[1].conj() * vj[1];
        }
    }
    Ok(OverlapMatrix { amps })
}

/// Scalar measure evaluated pointwise along a trajectory.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeasureKind {
    Fidelity,
    Exchange,
    /// |Sp_ij| with 1-based indices in {1, 2}.
    Overlap(usize, usize),
}

impl MeasureKind {
    /// Column name used in CSV headers and CLI measure lists.
    pub fn token(&self) -> String {
        match self {
            MeasureKind::Fidelity => "fidelity".into(),
            MeasureKind::Exchange => "exchange".into(),
            MeasureKind::Overlap(i, j) => format!("overlap{i}{j}"),
        }
    }

    pub fn from_token(s: &str) -> Option<Self> {
        match s {
            "fidelity" => Some(MeasureKind::Fidelity),
            "exchange" => Some(MeasureKind::Exchange),
            "overlap11" => Some(MeasureKind::Overlap(1, 1)),
            "overlap12" => Some(MeasureKind::Overlap(1, 2)),
            "overlap21" => Some(MeasureKind::Overlap(2, 1)),
            "overlap22" => Some(MeasureKind::Overlap(2, 2)),
            _ => None,
        }
    }
}

/// One measure column over a common time grid.
#[derive(Debug, Clone)]
pub struct MeasureColumn {
    pub kind: MeasureKind,
    pub values: Vec<f64>,
}

/// Measures sampled on a time grid.
#[derive(Debug, Clone)]
pub struct MeasureTable {
    pub times: Vec<f64>,
    pub columns: Vec<MeasureColumn>,
}

/// Evaluates measures along a precomputed trajectory against the initial
/// state u0 (the t = 0 state, which need not be the first grid point).
///
/// Evolved points are admitted through clamped density construction: the
/// O(lambda) propagator leaks slightly outside the Bloch sphere and that is
/// a property of the truncation, not a reason to fail a measurement.
pub fn measures_on_trajectory(
    u0: BlochVector,
    samples: &[(f64, BlochVector)],
    kinds: &[MeasureKind],
    mode: ExchangeMode,
) -> Result<MeasureTable> {
    let rho0 = QubitDensity::from_bloch(u0)?;
    let mut columns: Vec<MeasureColumn> = kinds
        .iter()
        .map(|&kind| MeasureColumn {
            kind,
            values: Vec::with_capacity(samples.len()),
        })
        .collect();
    let mut times = Vec::with_capacity(samples.len());
    for &(t, u) in samples {
        times.push(t);
        let rhot = QubitDensity::from_bloch_clamped(u)?;
        let overlaps = if kinds.iter().any(|k| matches!(k, MeasureKind::Overlap(..))) {
            Some(orthogonality_overlaps(&rho0, &rhot)?)
        } else {
            None
        };
        for col in &mut columns {
            let v = match col.kind {
                MeasureKind::Fidelity => fidelity(&rho0, &rhot),
                MeasureKind::Exchange => exchange_information(&rho0, &rhot, mode),
                MeasureKind::Overlap(i, j) => overlaps.as_ref().expect("computed above").abs(i, j),
            };
            col.values.push(v);
        }
    }
    Ok(MeasureTable { times, columns })
}

/// Convenience wrapper: closed-form trajectory plus pointwise measures.
pub fn measure_series(
    cfg: &DriveConfig,
    u0: BlochVector,
    grid: &TimeGrid,
    scheme: Scheme,
    kinds: &[MeasureKind],
    mode: ExchangeMode,
) -> Result<MeasureTable> {
    let samples = trajectory(cfg, u0, grid, scheme)?;
    measures_on_trajectory(u0, &samples, kinds, mode)
}
