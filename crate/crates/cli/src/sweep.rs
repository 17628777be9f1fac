//! Family sweeps: one row of invariants and bound-tightness ratios per
//! instance, in table, CSV, or JSON form.

use crate::report::{format_sig, format_split};
use dee_core::{
    bounds_report_from_parts, d_spectrum_of_matrix, distance_profile, generate,
    is_distance_degree_regular, DeeValue, GraphFamily, SplitExp,
};
use serde::Serialize;
use std::fmt::Write as _;

#[derive(Serialize)]
pub struct SweepData {
    pub n: usize,
    pub m: usize,
    pub wiener: u64,
    pub geometric_mean: f64,
    pub diameter: u32,
    pub mu1: f64,
    pub dee: DeeValue,
    pub lower_prior: SplitExp,
    pub lower: SplitExp,
    pub lower_spectral: SplitExp,
    pub upper: SplitExp,
    pub upper_prior: SplitExp,
    pub regular_r: Option<u64>,
    /// Tightness of the main lower bound: `lower / dee` in (0, 1].
    pub lower_over_dee: f64,
    /// Tightness of the main upper bound: `dee / upper` in (0, 1].
    pub dee_over_upper: f64,
}

#[derive(Serialize)]
#[serde(untagged)]
pub enum SweepRow {
    Ok(SweepData),
    Failed { n: usize, error: String },
}

/// Evaluates one family member; failures become per-row errors.
pub fn sweep_row(family: GraphFamily, n: usize) -> SweepRow {
    match evaluate(family) {
        Ok(data) => SweepRow::Ok(data),
        Err(e) => SweepRow::Failed { n, error: e.to_string() },
    }
}

fn evaluate(family: GraphFamily) -> Result<SweepData, dee_core::Error> {
    let g = generate(family)?;
    let profile = distance_profile(&g)?;
    let spectrum = d_spectrum_of_matrix(profile.matrix())?;
    let bounds = bounds_report_from_parts(&profile, &spectrum)?;
    // Ratios through logs stay finite past the f64 range.
    let ln_dee = bounds.dee.ln_value();
    Ok(SweepData {
        n: g.n(),
        m: g.edge_count(),
        wiener: profile.wiener(),
        geometric_mean: profile.geo_mean(),
        diameter: profile.diameter(),
        mu1: spectrum.mu1(),
        dee: bounds.dee,
        lower_over_dee: (bounds.lower.ln_value() - ln_dee).exp(),
        dee_over_upper: (ln_dee - bounds.upper.ln_value()).exp(),
        lower_prior: bounds.lower_prior,
        lower: bounds.lower,
        lower_spectral: bounds.lower_spectral,
        upper: bounds.upper,
        upper_prior: bounds.upper_prior,
        regular_r: is_distance_degree_regular(&profile),
    })
}

const COLUMNS: [&str; 15] = [
    "n",
    "m",
    "wiener",
    "geo_mean",
    "diameter",
    "mu1",
    "dee",
    "lower_prior",
    "lower",
    "lower_spectral",
    "upper",
    "upper_prior",
    "regular_r",
    "lower_over_dee",
    "dee_over_upper",
];

fn cells(data: &SweepData, digits: usize) -> Vec<String> {
    vec![
        data.n.to_string(),
        data.m.to_string(),
        data.wiener.to_string(),
        format_sig(data.geometric_mean, digits),
        data.diameter.to_string(),
        format_sig(data.mu1, digits),
        format_split(&data.dee.split, digits),
        format_split(&data.lower_prior, digits),
        format_split(&data.lower, digits),
        format_split(&data.lower_spectral, digits),
        format_split(&data.upper, digits),
        format_split(&data.upper_prior, digits),
        data.regular_r.map_or_else(|| "-".to_string(), |r| r.to_string()),
        format_sig(data.lower_over_dee, digits),
        format_sig(data.dee_over_upper, digits),
    ]
}

pub fn render_json(rows: &[SweepRow]) -> String {
    let mut out = serde_json::to_string_pretty(rows).expect("rows serialize");
    out.push('\n');
    out
}

pub fn render_csv(rows: &[SweepRow], digits: usize) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{},error", COLUMNS.join(","));
    for row in rows {
        match row {
            SweepRow::Ok(data) => {
                let _ = writeln!(out, "{},", cells(data, digits).join(","));
            }
            SweepRow::Failed { n, error } => {
                let blanks = ",".repeat(COLUMNS.len() - 1);
                let _ = writeln!(out, "{n}{blanks},{}", csv_quote(error));
            }
        }
    }
    out
}

fn csv_quote(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

pub fn render_table(rows: &[SweepRow], digits: usize) -> String {
    let mut grid: Vec<Vec<String>> = vec![COLUMNS.iter().map(|c| c.to_string()).collect()];
    for row in rows {
        match row {
            SweepRow::Ok(data) => grid.push(cells(data, digits)),
            SweepRow::Failed { n, error } => {
                let mut cells = vec![n.to_string()];
                cells.resize(COLUMNS.len(), "-".to_string());
                cells.push(format!("error: {error}"));
                grid.push(cells);
            }
        }
    }
    let mut widths = vec![0usize; COLUMNS.len()];
    for row in &grid {
        for (i, cell) in row.iter().take(COLUMNS.len()).enumerate() {
            widths[i] = widths[i].max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in &grid {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            if i < COLUMNS.len() {
                let _ = write!(line, "{cell:>width$}", width = widths[i]);
            } else {
                let _ = write!(line, "{cell}");
            }
        }
        let _ = writeln!(out, "{}", line.trim_end());
    }
    out
}
