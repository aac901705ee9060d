// Copyright 2026 pulsed-qubit Contributors
// SPDX-License-Identifier: Apache-2.0

//! Library-level numerical tolerances, fixed in one place.
//!
//! Cross-check tolerances used by `validate` and the acceptance suite are
//! pinned next to the checks themselves; the constants here guard state
//! construction.

/// Allowed |rho - rho^dagger| when accepting explicit matrix entries.
pub const HERMITICITY: f64 = 1e-12;

/// Allowed |tr rho - 1| when accepting explicit matrix entries.
pub const TRACE: f64 = 1e-12;

/// Floor on density-matrix eigenvalues; slightly negative values from
/// rounding are admitted.
pub const POSITIVITY: f64 = -1e-9;

/// Slack on the Bloch norm when building a density matrix without the
/// clamp flag. Matches `POSITIVITY`: |u| = 1 + 1e-9 puts the small
/// eigenvalue at -0.5e-9.
pub const NORM_SLACK: f64 = 1e-9;

/// Bloch norm below which the density matrix is treated as degenerate and
/// eigenvector requests are refused.
pub const DEGENERACY: f64 = 1e-10;

/// Pivot threshold of the eigenvector phase rule: the first component with
/// modulus above this is rotated to the real axis.
pub const PHASE_PIVOT: f64 = 1e-8;
