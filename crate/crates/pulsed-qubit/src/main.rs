// Copyright 2026 pulsed-qubit Contributors
// SPDX-License-Identifier: Apache-2.0

//! Command-line interface: evolve a driven qubit, compute measures, render
//! the built-in figure presets, run self-validation, and plot CSV output
//! as SVG line charts.
//!
//! Parameter precedence is command-line flag, then `--config` TOML value,
//! then built-in default. The TOML file is a flat table whose keys mirror
//! the flag names (`omega`, `delta`, `omega-l`, `lambda`, `theta`, `phi`,
//! `pulse-duration`, `scheme`, `tau-start`, `tau-end`, `points`,
//! `measures`, `exchange-mode`, `out`).

use std::f64::consts::PI;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

use pulsed_qubit::{
    all_presets, figure_csv, measures_csv, preset, render_chart, run_validation, trajectory_csv,
    CsvDocument, DriveConfig, Error, ExchangeMode, Level, MeasureKind, Result, RunScheme, RunSpec,
    StateAngles,
};

#[derive(Parser)]
#[command(
    name = "pulsed-qubit",
    version,
    about = "Driven-qubit dynamics, information measures, and figure artifacts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evolve the Bloch vector and write tau,ux,uy,uz.
    Evolve(EvolveArgs),
    /// Evaluate measures along the evolution and write tau,<measure>...
    Measure(MeasureArgs),
    /// Render a built-in figure preset (or `all`) to CSV.
    Figure(FigureArgs),
    /// Cross-check the closed forms against the numerical oracle.
    Validate(ValidateArgs),
    /// Render a CSV artifact as an SVG line chart.
    Plot(PlotArgs),
}

/// Flags shared by `evolve` and `measure`. Every physical flag mirrors the
/// symbol it sets; unset flags fall back to the config file, then to the
/// documented default.
#[derive(Args, Clone, Default)]
struct CommonArgs {
    /// TOML config file (flat table mirroring these flags).
    #[arg(long)]
    config: Option<PathBuf>,
    /// Rabi frequency Omega > 0 [default 1].
    #[arg(long)]
    omega: Option<f64>,
    /// Detuning Delta [default 0].
    #[arg(long)]
    delta: Option<f64>,
    /// Laser frequency omega_l > 0 [default 1].
    #[arg(long = "omega-l")]
    omega_l: Option<f64>,
    /// First-order expansion knob lambda in [0, 0.5] [default 0].
    #[arg(long)]
    lambda: Option<f64>,
    /// Initial polar angle theta in [0, pi], radians [default pi/2].
    #[arg(long)]
    theta: Option<f64>,
    /// Initial azimuthal angle phi, radians [default pi/2].
    #[arg(long)]
    phi: Option<f64>,
    /// Pulse duration T [default tau-end/omega, covering the grid].
    #[arg(long = "pulse-duration")]
    pulse_duration: Option<f64>,
    /// Evolution scheme: rwa | non-rwa | oracle-full | oracle-rwa.
    #[arg(long)]
    scheme: Option<String>,
    /// Grid start in scaled time tau = Omega*t [default 0].
    #[arg(long = "tau-start")]
    tau_start: Option<f64>,
    /// Grid end in scaled time [default 15].
    #[arg(long = "tau-end")]
    tau_end: Option<f64>,
    /// Number of grid points, >= 2 [default 2001].
    #[arg(long)]
    points: Option<usize>,
    /// Exchange entropy: von-neumann | fidelity-xlnx | fidelity-binary.
    #[arg(long = "exchange-mode")]
    exchange_mode: Option<String>,
    /// Output directory [default out].
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EvolveArgs {
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct MeasureArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Measures: fidelity | exchange | overlap11 | overlap12 | overlap21
    /// | overlap22 (comma-separated) [default fidelity].
    #[arg(long, value_delimiter = ',')]
    measures: Option<Vec<String>>,
}

#[derive(Args)]
struct FigureArgs {
    /// Preset identifier (see --list), or `all` for every preset.
    preset: Option<String>,
    /// List the available presets and exit.
    #[arg(long)]
    list: bool,
    /// TOML config file (only `out` and `exchange-mode` apply here).
    #[arg(long)]
    config: Option<PathBuf>,
    /// Exchange entropy for presets with an exchange column.
    #[arg(long = "exchange-mode")]
    exchange_mode: Option<String>,
    /// Output directory [default out].
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ValidateArgs {
    /// Validation depth: quick | full.
    #[arg(long, default_value = "quick")]
    level: String,
}

#[derive(Args)]
struct PlotArgs {
    /// CSV artifact produced by evolve/measure/figure.
    csv: PathBuf,
    /// Output SVG path [default: the CSV path with extension .svg].
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Flat TOML table mirroring the flag names.
#[derive(Deserialize, Default)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
struct FileConfig {
    omega: Option<f64>,
    delta: Option<f64>,
    omega_l: Option<f64>,
    lambda: Option<f64>,
    theta: Option<f64>,
    phi: Option<f64>,
    pulse_duration: Option<f64>,
    scheme: Option<String>,
    tau_start: Option<f64>,
    tau_end: Option<f64>,
    points: Option<usize>,
    measures: Option<Vec<String>>,
    exchange_mode: Option<String>,
    out: Option<PathBuf>,
}

impl FileConfig {
    fn load(path: Option<&Path>) -> Result<Self> {
        match path {
            None => Ok(Self::default()),
            Some(p) => {
                let text = std::fs::read_to_string(p)?;
                toml::from_str(&text)
                    .map_err(|e| Error::InvalidConfig(format!("{}: {e}", p.display())))
            }
        }
    }
}

fn parse_scheme(s: &str) -> Result<RunScheme> {
    RunScheme::from_token(s).ok_or_else(|| {
        Error::InvalidConfig(format!(
            "unknown scheme {s:?} (expected rwa, non-rwa, oracle-full, or oracle-rwa)"
        ))
    })
}

fn parse_exchange_mode(s: &str) -> Result<ExchangeMode> {
    ExchangeMode::from_token(s).ok_or_else(|| {
        Error::InvalidConfig(format!(
            "unknown exchange mode {s:?} (expected von-neumann, fidelity-xlnx, or fidelity-binary)"
        ))
    })
}

fn parse_measures(names: &[String]) -> Result<Vec<MeasureKind>> {
    names
        .iter()
        .map(|n| {
            MeasureKind::from_token(n).ok_or_else(|| {
                Error::InvalidConfig(format!(
                    "unknown measure {n:?} (expected fidelity, exchange, or overlapIJ with I,J in 1..2)"
                ))
            })
        })
        .collect()
}

/// Resolved common parameters: flag > config file > default.
struct Resolved {
    spec: RunSpec,
    out: PathBuf,
}

fn resolve(common: &CommonArgs, measures_flag: Option<&[String]>) -> Result<Resolved> {
    let file = FileConfig::load(common.config.as_deref())?;

    let omega = common.omega.or(file.omega).unwrap_or(1.0);
    let delta = common.delta.or(file.delta).unwrap_or(0.0);
    let omega_l = common.omega_l.or(file.omega_l).unwrap_or(1.0);
    let lambda = common.lambda.or(file.lambda).unwrap_or(0.0);
    let theta = common.theta.or(file.theta).unwrap_or(PI / 2.0);
    let phi = common.phi.or(file.phi).unwrap_or(PI / 2.0);
    let tau_start = common.tau_start.or(file.tau_start).unwrap_or(0.0);
    let tau_end = common.tau_end.or(file.tau_end).unwrap_or(15.0);
    let points = common.points.or(file.points).unwrap_or(2001);
    // By default the pulse lasts exactly to the end of the grid.
    let pulse_duration = common
        .pulse_duration
        .or(file.pulse_duration)
        .unwrap_or(if omega > 0.0 { tau_end / omega } else { 0.0 });

    let scheme_name = common
        .scheme
        .clone()
        .or(file.scheme)
        .unwrap_or_else(|| "rwa".to_string());
    let mode_name = common
        .exchange_mode
        .clone()
        .or(file.exchange_mode)
        .unwrap_or_else(|| ExchangeMode::default().token().to_string());
    let measure_names: Vec<String> = measures_flag
        .map(|m| m.to_vec())
        .or(file.measures)
        .unwrap_or_else(|| vec!["fidelity".to_string()]);

    let spec = RunSpec {
        scheme: parse_scheme(&scheme_name)?,
        config: DriveConfig::new(omega, delta, omega_l, lambda, pulse_duration)?,
        state: StateAngles::new(theta, phi)?,
        tau_start,
        tau_end,
        n_points: points,
        measures: parse_measures(&measure_names)?,
        exchange_mode: parse_exchange_mode(&mode_name)?,
    };
    spec.validate()?;
    let out = common
        .out
        .clone()
        .or(file.out)
        .unwrap_or_else(|| PathBuf::from("out"));
    Ok(Resolved { spec, out })
}

fn write_doc(doc: &CsvDocument, path: &Path) -> Result<()> {
    doc.write_to(path)?;
    println!("wrote {}", path.display());
    Ok(())
}

fn cmd_evolve(args: &EvolveArgs) -> Result<ExitCode> {
    let r = resolve(&args.common, None)?;
    let doc = trajectory_csv(&r.spec)?;
    write_doc(&doc, &r.out.join("evolve.csv"))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_measure(args: &MeasureArgs) -> Result<ExitCode> {
    let r = resolve(&args.common, args.measures.as_deref())?;
    let doc = measures_csv(&r.spec)?;
    write_doc(&doc, &r.out.join("measure.csv"))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_figure(args: &FigureArgs) -> Result<ExitCode> {
    if args.list {
        for p in all_presets() {
            println!("{:<14} {}", p.id, p.caption);
        }
        return Ok(ExitCode::SUCCESS);
    }
    let id = args
        .preset
        .as_deref()
        .ok_or_else(|| Error::InvalidSpec("missing preset id (try --list)".into()))?;
    let file = FileConfig::load(args.config.as_deref())?;
    let out = args
        .out
        .clone()
        .or(file.out)
        .unwrap_or_else(|| PathBuf::from("out"));
    let mode = match args
        .exchange_mode
        .as_deref()
        .or(file.exchange_mode.as_deref())
    {
        Some(s) => Some(parse_exchange_mode(s)?),
        None => None,
    };

    let selected = if id == "all" {
        all_presets()
    } else {
        vec![preset(id)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown preset {id:?} (try --list)")))?]
    };
    for mut p in selected {
        if let Some(m) = mode {
            p.exchange_mode = m;
        }
        let doc = figure_csv(&p)?;
        write_doc(&doc, &out.join(format!("{}.csv", p.id)))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_validate(args: &ValidateArgs) -> Result<ExitCode> {
    let level = match args.level.as_str() {
        "quick" => Level::Quick,
        "full" => Level::Full,
        other => {
            return Err(Error::InvalidConfig(format!(
                "unknown level {other:?} (expected quick or full)"
            )))
        }
    };
    let report = run_validation(level);
    print!("{}", report.render());
    Ok(if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn cmd_plot(args: &PlotArgs) -> Result<ExitCode> {
    let doc = CsvDocument::read_from(&args.csv)?;
    let title = args
        .csv
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "chart".to_string());
    let svg = render_chart(&doc, &title)?;
    let out = args
        .out
        .clone()
        .unwrap_or_else(|| args.csv.with_extension("svg"));
    if let Some(parent) = out.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent)?;
        }
    }
    std::fs::write(&out, svg)?;
    println!("wrote {}", out.display());
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Evolve(a) => cmd_evolve(a),
        Command::Measure(a) => cmd_measure(a),
        Command::Figure(a) => cmd_figure(a),
        Command::Validate(a) => cmd_validate(a),
        Command::Plot(a) => cmd_plot(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
