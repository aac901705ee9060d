// Copyright 2026 pulsed-qubit Contributors
// SPDX-License-Identifier: Apache-2.0

//! Static SVG 1.1 line charts for the CSV artifacts.
//!
//! The first CSV column is the horizontal axis; every further column
//! becomes one polyline. Layout, colors, and coordinate formatting are
//! fixed, so the same document always renders to the same bytes. No
//! scripts, no external references.

use std::fmt::Write as _;

use crate::csvio::CsvDocument;
use crate::error::{Error, Result};

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 520.0;
const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 175.0;
const MARGIN_TOP: f64 = 42.0;
const MARGIN_BOTTOM: f64 = 52.0;

/// Line colors, cycled across series.
const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
];

fn esc(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// Fixed two-decimal pixel coordinates keep the output deterministic.
fn px(v: f64) -> String {
    format!("{v:.2}")
}

/// Tick label with just enough decimals for the tick step.
fn tick_label(v: f64, step: f64) -> String {
    let decimals = if step >= 1.0 {
        0
    } else {
        (-step.log10().floor()) as usize
    };
    let s = format!("{v:.decimals$}");
    // Avoid the "-0" label for a zero tick.
    if s.starts_with('-') && s.trim_start_matches(['-', '0', '.']).is_empty() {
        s[1..].to_string()
    } else {
        s
    }
}

/// Largest "nice" step (1, 2, or 5 times a power of ten) that yields at
/// most `max_ticks` intervals over `span`.
fn nice_step(span: f64, max_ticks: usize) -> f64 {
    let raw = span / max_ticks as f64;
    let mag = 10f64.powf(raw.log10().floor());
    for m in [1.0, 2.0, 5.0, 10.0] {
        if mag * m >= raw {
            return mag * m;
        }
    }
    mag * 10.0
}

fn ticks(min: f64, max: f64, max_ticks: usize) -> (Vec<f64>, f64) {
    let step = nice_step(max - min, max_ticks);
    let first = (min / step).ceil() * step;
    let mut out = Vec::new();
    let mut k = 0;
    loop {
        let v = first + k as f64 * step;
        if v > max + 1e-9 * step {
            break;
        }
        // Snap values that are zero up to rounding so labels stay clean.
        out.push(if v.abs() < 1e-12 * step { 0.0 } else { v });
        k += 1;
    }
    (out, step)
}

/// Renders `doc` as a line chart. The chart title is typically the preset
/// or file name; the axis labels come from the CSV header.
pub fn render_chart(doc: &CsvDocument, title: &str) -> Result<String> {
    if doc.header.len() < 2 {
        return Err(Error::MalformedCsv(
            "chart needs an abscissa column and at least one series".into(),
        ));
    }
    if doc.rows.is_empty() {
        return Err(Error::MalformedCsv("no data rows to plot".into()));
    }

    let xs = doc.column(0);
    let (xmin, xmax) = bounds(&xs);
    let mut ymin = f64::INFINITY;
    let mut ymax = f64::NEG_INFINITY;
    for col in 1..doc.header.len() {
        for v in doc.column(col) {
            ymin = ymin.min(v);
            ymax = ymax.max(v);
        }
    }
    let (xmin, xmax) = pad_degenerate(xmin, xmax);
    let (ymin, ymax) = pad_degenerate(ymin, ymax);

    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let to_x = |v: f64| MARGIN_LEFT + (v - xmin) / (xmax - xmin) * plot_w;
    let to_y = |v: f64| MARGIN_TOP + (ymax - v) / (ymax - ymin) * plot_h;

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(
        s,
        r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );
    let _ = writeln!(
        s,
        r#"<text x="{}" y="24" font-family="sans-serif" font-size="16" text-anchor="middle">{}</text>"#,
        px(MARGIN_LEFT + plot_w / 2.0),
        esc(title)
    );

    // Axes frame.
    let _ = writeln!(
        s,
        r#"<rect x="{}" y="{}" width="{}" height="{}" fill="none" stroke="black" stroke-width="1"/>"#,
        px(MARGIN_LEFT),
        px(MARGIN_TOP),
        px(plot_w),
        px(plot_h)
    );

    // Ticks, grid lines, labels.
    let (xticks, xstep) = ticks(xmin, xmax, 8);
    for &t in &xticks {
        let x = to_x(t);
        let _ = writeln!(
            s,
            r##"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}" stroke="#cccccc" stroke-width="0.5"/>"##,
            px(x),
            px(MARGIN_TOP),
            px(MARGIN_TOP + plot_h)
        );
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" font-family="sans-serif" font-size="12" text-anchor="middle">{}</text>"#,
            px(x),
            px(MARGIN_TOP + plot_h + 18.0),
            tick_label(t, xstep)
        );
    }
    let (yticks, ystep) = ticks(ymin, ymax, 6);
    for &t in &yticks {
        let y = to_y(t);
        let _ = writeln!(
            s,
            r##"<line x1="{1}" y1="{0}" x2="{2}" y2="{0}" stroke="#cccccc" stroke-width="0.5"/>"##,
            px(y),
            px(MARGIN_LEFT),
            px(MARGIN_LEFT + plot_w)
        );
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" font-family="sans-serif" font-size="12" text-anchor="end">{}</text>"#,
            px(MARGIN_LEFT - 8.0),
            px(y + 4.0),
            tick_label(t, ystep)
        );
    }

    // Axis titles: abscissa name under the axis, series domain on the left.
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" font-family="sans-serif" font-size="14" text-anchor="middle">{}</text>"#,
        px(MARGIN_LEFT + plot_w / 2.0),
        px(HEIGHT - 12.0),
        esc(&doc.header[0])
    );
    let _ = writeln!(
        s,
        r#"<text x="18" y="{}" font-family="sans-serif" font-size="14" text-anchor="middle" transform="rotate(-90 18 {})">value</text>"#,
        px(MARGIN_TOP + plot_h / 2.0),
        px(MARGIN_TOP + plot_h / 2.0)
    );

    // One polyline per series plus a legend entry.
    for (k, name) in doc.header.iter().enumerate().skip(1) {
        let color = PALETTE[(k - 1) % PALETTE.len()];
        let mut points = String::new();
        for row in &doc.rows {
            let _ = write!(points, "{},{} ", px(to_x(row[0])), px(to_y(row[k])));
        }
        let _ = writeln!(
            s,
            r#"<polyline fill="none" stroke="{}" stroke-width="1.5" points="{}"/>"#,
            color,
            points.trim_end()
        );
        let ly = MARGIN_TOP + 10.0 + (k - 1) as f64 * 20.0;
        let lx = MARGIN_LEFT + plot_w + 12.0;
        let _ = writeln!(
            s,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{}" stroke-width="1.5"/>"#,
            px(lx),
            px(ly),
            px(lx + 22.0),
            px(ly),
            color
        );
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" font-family="sans-serif" font-size="12">{}</text>"#,
            px(lx + 28.0),
            px(ly + 4.0),
            esc(name)
        );
    }

    let _ = writeln!(s, "</svg>");
    Ok(s)
}

fn bounds(vs: &[f64]) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for &v in vs {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    (lo, hi)
}

/// A flat series still needs a finite axis range.
fn pad_degenerate(lo: f64, hi: f64) -> (f64, f64) {
    if hi > lo {
        (lo, hi)
    } else {
        (lo - 0.5, hi + 0.5)
    }
}
