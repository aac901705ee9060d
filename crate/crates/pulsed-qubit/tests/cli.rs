// Copyright 2026 pulsed-qubit Contributors
// SPDX-License-Identifier: Apache-2.0

//! End-to-end tests of the `pulsed-qubit` binary: artifact layout, flag
//! and config-file precedence, determinism across processes, and error
//! reporting on the process boundary.

use std::f64::consts::PI;
use std::path::Path;
use std::process::{Command, Output};

use pulsed_qubit::CsvDocument;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pulsed-qubit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn read_doc(path: &Path) -> CsvDocument {
    CsvDocument::read_from(path).expect("artifact parses")
}

#[test]
fn evolve_writes_trajectory_artifact() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "evolve",
        "--tau-end",
        "6.283185307179586",
        "--points",
        "5",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let path = dir.path().join("evolve.csv");
    assert!(stdout(&out).contains("wrote"), "stdout: {}", stdout(&out));

    let doc = read_doc(&path);
    assert_eq!(doc.header, vec!["tau", "ux", "uy", "uz"]);
    assert_eq!(doc.rows.len(), 5);
    assert!(doc.comments.iter().any(|c| c.contains("scheme=rwa")));
    // Defaults put the state at (theta, phi) = (pi/2, pi/2): u0 = +y. On
    // resonance the evolution is a rotation about x, so after a full turn
    // (tau = 2 pi) the trajectory closes.
    let first = &doc.rows[0];
    let last = &doc.rows[4];
    assert!((first[0]).abs() < 1e-15 && (last[0] - 2.0 * PI).abs() < 1e-12);
    for k in 1..4 {
        assert!(
            (first[k] - last[k]).abs() < 1e-10,
            "trajectory should close after one period: {first:?} vs {last:?}"
        );
    }
}

#[test]
fn measure_selects_requested_columns() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "measure",
        "--measures",
        "fidelity,overlap11,exchange",
        "--points",
        "9",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let doc = read_doc(&dir.path().join("measure.csv"));
    assert_eq!(doc.header, vec!["tau", "fidelity", "overlap11", "exchange"]);
    assert_eq!(doc.rows.len(), 9);
    assert!(doc
        .comments
        .iter()
        .any(|c| c.contains("exchange_mode=fidelity-binary")));
    // |Sp11|^2 = F for pure states, on every row.
    for row in &doc.rows {
        assert!((row[2] * row[2] - row[1]).abs() < 1e-10);
    }
}

#[test]
fn figure_artifacts_are_deterministic_across_processes() {
    let dir_a = tempfile::tempdir().unwrap();
    let dir_b = tempfile::tempdir().unwrap();
    for dir in [&dir_a, &dir_b] {
        let out = run(&["figure", "fig1a", "--out", dir.path().to_str().unwrap()]);
        assert!(out.status.success(), "stderr: {}", stderr(&out));
    }
    let a = std::fs::read(dir_a.path().join("fig1a.csv")).unwrap();
    let b = std::fs::read(dir_b.path().join("fig1a.csv")).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, b, "two runs must produce byte-identical artifacts");
}

#[test]
fn figure_list_names_every_preset() {
    let out = run(&["figure", "--list"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for id in pulsed_qubit::PRESET_IDS {
        assert!(text.contains(id), "missing preset {id} in --list output");
    }
}

#[test]
fn figure_all_writes_every_preset() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["figure", "all", "--out", dir.path().to_str().unwrap()]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    for id in pulsed_qubit::PRESET_IDS {
        assert!(
            dir.path().join(format!("{id}.csv")).is_file(),
            "missing artifact for {id}"
        );
    }
}

#[test]
fn config_file_applies_with_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("run.toml");
    std::fs::write(
        &config,
        format!(
            "delta = 0.5\ntau-end = 10.0\npoints = 11\nmeasures = [\"exchange\"]\nout = \"{}\"\n",
            dir.path().join("from-file").display()
        ),
    )
    .unwrap();

    // The flag overrides the file's tau-end; everything else (delta,
    // points, measures, out) comes from the file.
    let out = run(&[
        "measure",
        "--config",
        config.to_str().unwrap(),
        "--tau-end",
        "12.0",
    ]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let doc = read_doc(&dir.path().join("from-file").join("measure.csv"));
    assert_eq!(doc.header, vec!["tau", "exchange"]);
    assert_eq!(doc.rows.len(), 11);
    let last_tau = doc.rows.last().unwrap()[0];
    assert!((last_tau - 12.0).abs() < 1e-12, "flag must win: {last_tau}");
    assert!(doc.comments.iter().any(|c| c.contains("delta=0.5")));
}

#[test]
fn config_file_with_unknown_key_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("bad.toml");
    std::fs::write(&config, "omega = 1.0\nrabi = 2.0\n").unwrap();
    let out = run(&["evolve", "--config", config.to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("error:"), "stderr: {}", stderr(&out));
}

#[test]
fn grid_beyond_pulse_is_rejected() {
    let out = run(&["evolve", "--pulse-duration", "5", "--tau-end", "15"]);
    assert!(!out.status.success());
    let err = stderr(&out);
    assert!(
        err.contains("error:") && err.contains("pulse"),
        "stderr: {err}"
    );
}

#[test]
fn unknown_tokens_are_rejected() {
    let cases: &[&[&str]] = &[
        &["figure", "fig99"],
        &["evolve", "--scheme", "heisenberg"],
        &["measure", "--measures", "purity"],
        &["evolve", "--exchange-mode", "renyi"],
        &["validate", "--level", "exhaustive"],
        &["evolve", "--theta", "4.0"],
    ];
    for args in cases {
        let out = run(args);
        assert!(!out.status.success(), "{args:?} should fail");
        assert!(
            stderr(&out).contains("error:"),
            "{args:?} stderr: {}",
            stderr(&out)
        );
    }
}

#[test]
fn non_rwa_scheme_requires_resonance() {
    let out = run(&[
        "evolve", "--scheme", "non-rwa", "--delta", "0.3", "--lambda", "0.1",
    ]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("error:"), "stderr: {}", stderr(&out));
}

#[test]
fn validate_quick_passes_and_reports() {
    let out = run(&["validate", "--level", "quick"]);
    let text = stdout(&out);
    assert!(out.status.success(), "report:\n{text}");
    assert!(text.contains("checks passed"), "report:\n{text}");
    assert!(text.contains("rwa-vs-oracle"), "report:\n{text}");
}

#[test]
fn plot_renders_figure_chart() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["figure", "fig1a", "--out", dir.path().to_str().unwrap()]);
    assert!(out.status.success());
    let csv = dir.path().join("fig1a.csv");
    let out = run(&["plot", csv.to_str().unwrap()]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));

    let svg = std::fs::read_to_string(dir.path().join("fig1a.svg")).unwrap();
    assert!(svg.starts_with("<?xml"));
    assert!(svg.contains("<svg"));
    // One polyline per data column: fig1a carries three fidelity curves.
    assert_eq!(svg.matches("<polyline").count(), 3, "svg:\n{svg}");
    assert!(svg.contains("fig1a"));
}

#[test]
fn plot_explicit_output_path() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "evolve",
        "--points",
        "16",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let csv = dir.path().join("evolve.csv");
    let target = dir.path().join("charts").join("bloch.svg");
    let out = run(&[
        "plot",
        csv.to_str().unwrap(),
        "--out",
        target.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let svg = std::fs::read_to_string(&target).unwrap();
    // tau plus the three Bloch components.
    assert_eq!(svg.matches("<polyline").count(), 3);
}

#[test]
fn plot_missing_file_fails_cleanly() {
    let out = run(&["plot", "/nonexistent/nowhere.csv"]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("error:"), "stderr: {}", stderr(&out));
}
