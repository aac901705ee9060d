// Copyright 2026 pulsed-qubit Contributors
// SPDX-License-Identifier: Apache-2.0

//! Minimal deterministic CSV support for the artifacts this crate emits:
//! optional `#`-prefixed metadata comment lines, one header line, then
//! purely numeric rows. Comma separator, LF line endings, UTF-8, and no
//! quoting (column names never contain commas).
//!
//! Floating-point values are rendered in scientific notation with 12
//! significant digits, enough to round-trip the plotted dynamics and stable
//! across runs, so identical inputs produce byte-identical files.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};

/// Renders `x` with 12 significant digits in scientific notation.
/// Negative zero is normalized to plain zero so equivalent computations
/// cannot differ in sign noise.
pub fn format_sig12(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.11e}")
}

/// An in-memory CSV artifact: comments, header, numeric rows.
#[derive(Debug, Clone, PartialEq)]
pub struct CsvDocument {
    /// Metadata lines, stored without the leading `# `.
    pub comments: Vec<String>,
    pub header: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl CsvDocument {
    /// Starts a document with the given column names.
    pub fn new(header: Vec<String>) -> Result<Self> {
        if header.is_empty() {
            return Err(Error::MalformedCsv("header has no columns".into()));
        }
        for name in &header {
            if name.is_empty() || name.contains(',') || name.contains('\n') || name.contains('#') {
                return Err(Error::MalformedCsv(format!("invalid column name {name:?}")));
            }
        }
        Ok(Self {
            comments: Vec::new(),
            header,
            rows: Vec::new(),
        })
    }

    /// Adds one metadata line (rendered as `# <text>` above the header).
    pub fn push_comment(&mut self, text: impl Into<String>) {
        self.comments.push(text.into());
    }

    /// Appends a data row; its width must match the header.
    pub fn push_row(&mut self, row: Vec<f64>) -> Result<()> {
        if row.len() != self.header.len() {
            return Err(Error::MalformedCsv(format!(
                "row has {} fields, header has {}",
                row.len(),
                self.header.len()
            )));
        }
        if row.iter().any(|v| !v.is_finite()) {
            return Err(Error::MalformedCsv("non-finite value in row".into()));
        }
        self.rows.push(row);
        Ok(())
    }

    /// Index of a named column.
    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.header.iter().position(|h| h == name)
    }

    /// All values of column `k`, in row order.
    pub fn column(&self, k: usize) -> Vec<f64> {
        self.rows.iter().map(|r| r[k]).collect()
    }

    /// Renders the document to its canonical byte form.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.comments {
            let _ = writeln!(out, "# {c}");
        }
        let _ = writeln!(out, "{}", self.header.join(","));
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(|&v| format_sig12(v)).collect();
            let _ = writeln!(out, "{}", line.join(","));
        }
        out
    }

    /// Writes the canonical rendering, creating parent directories.
    pub fn write_to(&self, path: &Path) -> Result<()> {
        if let Some(parent) = path.parent() {
            if !parent.as_os_str().is_empty() {
                fs::create_dir_all(parent)?;
            }
        }
        fs::write(path, self.render())?;
        Ok(())
    }

    /// Parses a document previously produced by [`render`](Self::render).
    ///
    /// Comment lines must precede the header; every data row must have the
    /// header's width and contain only finite numbers.
    pub fn parse(text: &str) -> Result<Self> {
        let mut comments = Vec::new();
        let mut header: Option<Vec<String>> = None;
        let mut rows = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim_end_matches('\r');
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('#') {
                if header.is_some() {
                    return Err(Error::MalformedCsv(format!(
                        "line {}: comment after header",
                        lineno + 1
                    )));
                }
                comments.push(rest.trim_start().to_string());
                continue;
            }
            match &header {
                None => {
                    header = Some(line.split(',').map(str::to_string).collect());
                }
                Some(h) => {
                    let mut row = Vec::with_capacity(h.len());
                    for field in line.split(',') {
                        let v: f64 = field.trim().parse().map_err(|_| {
                            Error::MalformedCsv(format!(
                                "line {}: unparseable number {field:?}",
                                lineno + 1
                            ))
                        })?;
                        if !v.is_finite() {
                            return Err(Error::MalformedCsv(format!(
                                "line {}: non-finite value",
                                lineno + 1
                            )));
                        }
                        row.push(v);
                    }
                    if row.len() != h.len() {
                        return Err(Error::MalformedCsv(format!(
                            "line {}: {} fields, expected {}",
                            lineno + 1,
                            row.len(),
                            h.len()
                        )));
                    }
                    rows.push(row);
                }
            }
        }
        let header = header.ok_or_else(|| Error::MalformedCsv("empty document".into()))?;
        let mut doc = CsvDocument::new(header)?;
        doc.comments = comments;
        doc.rows = rows;
        Ok(doc)
    }

    /// Reads and parses a file.
    pub fn read_from(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        Self::parse(&text)
    }
}
