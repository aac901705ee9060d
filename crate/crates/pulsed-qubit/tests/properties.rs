// Copyright 2026 pulsed-qubit Contributors
// SPDX-License-Identifier: Apache-2.0

//! Property-based invariants: structural facts that must hold for every
//! valid input, checked over randomized configurations with shrinking.

use std::f64::consts::PI;

use proptest::prelude::*;

use pulsed_qubit::{
    exchange_information, fidelity, format_sig12, nonrwa_matrix, orthogonality_overlaps,
    rwa_matrix, trajectory, BlochVector, CsvDocument, DriveConfig, ExchangeMode, QubitDensity,
    Scheme, StateAngles, TimeGrid,
};

/// A drive long enough that no sampled time can leave the pulse.
const LONG_PULSE: f64 = 1e6;

fn drive(omega: f64, delta: f64, omega_l: f64, lambda: f64) -> DriveConfig {
    DriveConfig::new(omega, delta, omega_l, lambda, LONG_PULSE).expect("valid drive")
}

fn bloch(theta: f64, phi: f64) -> BlochVector {
    StateAngles::new(theta, phi).expect("valid angles").bloch()
}

/// A mixed state strictly inside the Bloch ball.
fn mixed(theta: f64, phi: f64, r: f64) -> QubitDensity {
    QubitDensity::from_bloch(bloch(theta, phi).scaled(r)).expect("valid state")
}

proptest! {
    /// The closed-form propagator is an isometry of the Bloch ball.
    #[test]
    fn rwa_preserves_norm(
        omega in 0.1f64..10.0,
        delta in -5.0f64..5.0,
        theta in 0.0f64..=PI,
        phi in 0.0f64..(2.0 * PI),
        t in 0.0f64..50.0,
    ) {
        let cfg = drive(omega, delta, 1.0, 0.0);
        let u0 = bloch(theta, phi);
        let u = rwa_matrix(&cfg, t).unwrap().apply(u0);
        prop_assert!((u.norm() - u0.norm()).abs() <= 1e-12);
    }

    /// A time-independent generator composes additively in time.
    #[test]
    fn rwa_composes_in_time(
        omega in 0.1f64..10.0,
        delta in -5.0f64..5.0,
        t1 in 0.0f64..25.0,
        t2 in 0.0f64..25.0,
    ) {
        let cfg = drive(omega, delta, 1.0, 0.0);
        let whole = rwa_matrix(&cfg, t1 + t2).unwrap();
        let split = rwa_matrix(&cfg, t2).unwrap().compose(&rwa_matrix(&cfg, t1).unwrap());
        for i in 0..3 {
            for j in 0..3 {
                prop_assert!((whole.entry(i, j) - split.entry(i, j)).abs() <= 1e-12);
            }
        }
    }

    /// The first-order propagator is affine in the expansion parameter:
    /// M(l1) + M(l2) = 2 M((l1 + l2) / 2), entry by entry.
    #[test]
    fn nonrwa_is_affine_in_lambda(
        omega in 0.1f64..10.0,
        omega_l in 0.1f64..10.0,
        l1 in 0.0f64..=0.5,
        l2 in 0.0f64..=0.5,
        t in 0.0f64..50.0,
    ) {
        let at = |l: f64| nonrwa_matrix(&drive(omega, 0.0, omega_l, l), t).unwrap();
        let a = at(l1);
        let b = at(l2);
        let mid = at((l1 + l2) / 2.0);
        for i in 0..3 {
            for j in 0..3 {
                let gap = a.entry(i, j) + b.entry(i, j) - 2.0 * mid.entry(i, j);
                prop_assert!(gap.abs() <= 1e-12);
            }
        }
    }

    /// The trajectory API agrees with direct matrix application.
    #[test]
    fn trajectory_matches_matrix(
        omega in 0.1f64..10.0,
        delta in -5.0f64..5.0,
        theta in 0.0f64..=PI,
        phi in 0.0f64..(2.0 * PI),
        t_end in 0.1f64..50.0,
    ) {
        let cfg = drive(omega, delta, 1.0, 0.0);
        let u0 = bloch(theta, phi);
        let grid = TimeGrid::linspace(0.0, t_end, 17).unwrap();
        let samples = trajectory(&cfg, u0, &grid, Scheme::Rwa).unwrap();
        for (t, u) in samples {
            let direct = rwa_matrix(&cfg, t).unwrap().apply(u0);
            prop_assert!((u.x - direct.x).abs() <= 1e-12);
            prop_assert!((u.y - direct.y).abs() <= 1e-12);
            prop_assert!((u.z - direct.z).abs() <= 1e-12);
        }
    }

    /// Transfer fidelity is symmetric and confined to [0, 1].
    #[test]
    fn fidelity_symmetric_and_bounded(
        ta in 0.0f64..=PI, pa in 0.0f64..(2.0 * PI), ra in 0.0f64..1.0,
        tb in 0.0f64..=PI, pb in 0.0f64..(2.0 * PI), rb in 0.0f64..1.0,
    ) {
        let a = mixed(ta, pa, ra);
        let b = mixed(tb, pb, rb);
        let fab = fidelity(&a, &b);
        let fba = fidelity(&b, &a);
        prop_assert!((fab - fba).abs() <= 1e-14);
        prop_assert!((0.0..=1.0).contains(&fab));
    }

    /// Every exchange mode stays within its analytic bound.
    #[test]
    fn exchange_bounds(
        ta in 0.0f64..=PI, pa in 0.0f64..(2.0 * PI), ra in 0.0f64..1.0,
        tb in 0.0f64..=PI, pb in 0.0f64..(2.0 * PI), rb in 0.0f64..1.0,
    ) {
        let a = mixed(ta, pa, ra);
        let b = mixed(tb, pb, rb);
        let vn = exchange_information(&a, &b, ExchangeMode::VonNeumann);
        let xlnx = exchange_information(&a, &b, ExchangeMode::FidelityXlnX);
        let binary = exchange_information(&a, &b, ExchangeMode::FidelityBinary);
        // Qubit entropy is at most ln 2; -F ln F peaks at 1/e.
        prop_assert!((0.0..=2.0f64.ln() + 1e-12).contains(&vn));
        prop_assert!((0.0..=1.0 / std::f64::consts::E + 1e-12).contains(&xlnx));
        prop_assert!((0.0..=2.0f64.ln() + 1e-12).contains(&binary));
    }

    /// Spectral decomposition reconstructs the density matrix.
    #[test]
    fn eigensystem_reconstructs_state(
        theta in 0.0f64..=PI,
        phi in 0.0f64..(2.0 * PI),
        r in 0.01f64..1.0,
    ) {
        let rho = mixed(theta, phi, r);
        let eig = rho.eigensystem().unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let mut sum = num_complex::Complex64::new(0.0, 0.0);
                for k in 0..2 {
                    sum += eig.values[k] * eig.vectors[k][i] * eig.vectors[k][j].conj();
                }
                prop_assert!((sum - rho.entry(i, j)).norm() <= 1e-12);
            }
        }
        prop_assert!(eig.values[0] >= eig.values[1]);
        prop_assert!((eig.values[0] + eig.values[1] - 1.0).abs() <= 1e-12);
    }

    /// The overlap matrix between two non-degenerate bases is unitary:
    /// each row and column carries unit probability.
    #[test]
    fn overlap_matrix_is_unitary(
        ta in 0.0f64..=PI, pa in 0.0f64..(2.0 * PI),
        tb in 0.0f64..=PI, pb in 0.0f64..(2.0 * PI),
    ) {
        let a = QubitDensity::from_bloch(bloch(ta, pa)).unwrap();
        let b = QubitDensity::from_bloch(bloch(tb, pb)).unwrap();
        let sp = orthogonality_overlaps(&a, &b).unwrap();
        for k in 1..=2 {
            let row: f64 = (1..=2).map(|j| sp.abs(k, j).powi(2)).sum();
            let col: f64 = (1..=2).map(|i| sp.abs(i, k).powi(2)).sum();
            prop_assert!((row - 1.0).abs() <= 1e-12);
            prop_assert!((col - 1.0).abs() <= 1e-12);
        }
    }

    /// Twelve significant digits survive a format/parse round trip.
    #[test]
    fn sig12_round_trips(mantissa in -1.0f64..1.0, exp in -30i32..30) {
        let x = mantissa * 10f64.powi(exp);
        let text = format_sig12(x);
        let back: f64 = text.parse().unwrap();
        let scale = x.abs().max(f64::MIN_POSITIVE);
        prop_assert!((back - x).abs() <= 1e-11 * scale);
    }

    /// Rendered CSV text parses back to the same document, and the
    /// re-render is byte-stable.
    #[test]
    fn csv_round_trip_is_stable(
        n_rows in 1usize..20,
        seed in 0.0f64..1.0,
    ) {
        let mut doc = CsvDocument::new(vec!["tau".into(), "value".into()]).unwrap();
        doc.push_comment("property round trip");
        for k in 0..n_rows {
            let x = seed + k as f64;
            doc.push_row(vec![x, (x * 7.3).sin() * 10f64.powi((k % 9) as i32 - 4)]).unwrap();
        }
        let text = doc.render();
        let parsed = CsvDocument::parse(&text).unwrap();
        prop_assert_eq!(parsed.render(), text);
        prop_assert_eq!(&parsed.header, &doc.header);
        prop_assert_eq!(parsed.rows.len(), doc.rows.len());
    }

    /// Linspace grids hit both endpoints exactly and increase strictly.
    #[test]
    fn linspace_endpoints_exact(
        start in -10.0f64..10.0,
        span in 0.1f64..100.0,
        n in 2usize..500,
    ) {
        let grid = TimeGrid::linspace(start, start + span, n).unwrap();
        let pts = grid.points();
        prop_assert_eq!(pts.len(), n);
        prop_assert_eq!(pts[0], start);
        prop_assert_eq!(pts[n - 1], start + span);
        prop_assert!(pts.windows(2).all(|w| w[0] < w[1]));
    }

    /// Angle validation rejects anything outside the spherical domain.
    #[test]
    fn angles_outside_domain_rejected(theta in prop::num::f64::ANY) {
        prop_assume!(!(0.0..=PI).contains(&theta) || !theta.is_finite());
        prop_assert!(StateAngles::new(theta, 0.0).is_err());
    }
}
