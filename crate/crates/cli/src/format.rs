//! Rendering of triangles and polynomial lists.
//!
//! Every number leaves this module as the exact text `p` or `p/q`.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use triads_core::{ExactScalar, Polynomial, Row};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// Centered triangle
    #[default]
    Pretty,
    /// One row per line, comma separated, no header
    Csv,
    /// Single JSON object with exact rationals as strings
    Json,
}

/// What a triangle was generated from; the weights are shown as expressions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Header {
    pub name: String,
    pub i: String,
    pub q: String,
    pub d: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleDoc {
    pub name: String,
    pub i: String,
    pub q: String,
    pub d: String,
    pub rows: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialDoc {
    pub name: String,
    pub i: String,
    pub q: String,
    pub d: String,
    /// Ascending coefficient lists, one per degree.
    pub polynomials: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub name: String,
    pub i: String,
    pub q: String,
    pub d: String,
    pub max: usize,
    pub rows_match: Vec<bool>,
    pub first_mismatch: Option<MismatchDoc>,
    /// Present only when the walk comparison was requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleDoc>,
    pub passed: bool,
}

/// `expected` is the recurrence value, `actual` the value it was checked against.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MismatchDoc {
    pub n: usize,
    pub k: usize,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleDoc {
    pub max: usize,
    pub first_mismatch: Option<MismatchDoc>,
}

fn text_rows(rows: &[Row]) -> Vec<Vec<String>> {
    rows.iter()
        .map(|row| row.iter().map(ExactScalar::to_string).collect())
        .collect()
}

/// Compact JSON plus a trailing newline. Parsing it back and calling this
/// again yields the same bytes.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string(value).expect("plain structs always serialize");
    out.push('\n');
    out
}

pub fn render_triangle(header: &Header, rows: &[Row], format: OutputFormat) -> String {
    let text = text_rows(rows);
    match format {
        OutputFormat::Pretty => centered(&text),
        OutputFormat::Csv => csv(&text),
        OutputFormat::Json => to_json(&TriangleDoc {
            name: header.name.clone(),
            i: header.i.clone(),
            q: header.q.clone(),
            d: header.d.clone(),
            rows: text,
        }),
    }
}

fn csv(rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// Lays rows out as an isosceles triangle: each row is shifted half a cell
/// to the right of the one below it, cells are centered in a common width.
fn centered(rows: &[Vec<String>]) -> String {
    let width = rows
        .iter()
        .flatten()
        .map(|s| s.chars().count())
        .max()
        .unwrap_or(1);
    // an even stride keeps the half-cell shift on a character boundary
    let stride = (width + 1).max(4).div_ceil(2) * 2;
    let cell = stride - 1;
    let last = rows.len().saturating_sub(1);
    let mut lines = Vec::with_capacity(rows.len());
    for (n, row) in rows.iter().enumerate() {
        let mut line = " ".repeat((last - n) * stride / 2);
        for (k, value) in row.iter().enumerate() {
            if k > 0 {
                line.push(' ');
            }
            let len = value.chars().count();
            let left = (cell - len) / 2;
            let _ = write!(line, "{}{}{}", " ".repeat(left), value, " ".repeat(cell - len - left));
        }
        lines.push(line.trim_end().to_string());
    }
    let indent = lines
        .iter()
        .map(|l| l.len() - l.trim_start().len())
        .min()
        .unwrap_or(0);
    let mut out = String::new();
    for line in &lines {
        out.push_str(&line[indent..]);
        out.push('\n');
    }
    out
}

pub fn render_polynomials(header: &Header, polys: &[Polynomial], format: OutputFormat) -> String {
    match format {
        OutputFormat::Pretty => {
            let mut out = String::new();
            for (n, p) in polys.iter().enumerate() {
                let _ = writeln!(out, "Φ{n} = {p}");
            }
            out
        }
        OutputFormat::Csv => csv(&coefficient_rows(polys)),
        OutputFormat::Json => to_json(&PolynomialDoc {
            name: header.name.clone(),
            i: header.i.clone(),
            q: header.q.clone(),
            d: header.d.clone(),
            polynomials: coefficient_rows(polys),
        }),
    }
}

fn coefficient_rows(polys: &[Polynomial]) -> Vec<Vec<String>> {
    polys
        .iter()
        .map(|p| p.coeffs().iter().map(ExactScalar::to_string).collect())
        .collect()
}
