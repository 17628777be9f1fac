//! The per-graph report document and its JSON/table rendering.
//!
//! The JSON form is a single self-describing object with struct-defined
//! key order and untouched f64 values, so identical inputs produce
//! byte-identical output. The table form rounds to a configurable number
//! of significant digits.

use dee_core::{
    bounds_report_from_parts, d_spectrum_of_matrix_bounded, distance_profile,
    is_distance_degree_regular, BoundsReport, DSpectrum, DeeValue, Graph, SplitExp,
};
use serde::Serialize;
use std::fmt::Write as _;

#[derive(Serialize)]
pub struct GraphSection {
    pub n: usize,
    pub m: usize,
    /// Family tag when the graph came from a generator; absent for files.
    pub family: Option<String>,
}

#[derive(Serialize)]
pub struct ProfileSection {
    pub wiener: u64,
    pub geometric_mean: f64,
    pub diameter: u32,
    pub distance_degrees: Vec<u64>,
    /// The common distance degree, when all of them coincide.
    pub distance_degree_regular: Option<u64>,
}

#[derive(Serialize)]
pub struct SpectrumSection {
    pub eigenvalues: Vec<f64>,
    pub n_plus: usize,
    pub n_zero: usize,
    pub n_minus: usize,
}

#[derive(Serialize)]
pub struct Provenance {
    pub version: String,
    pub input_digest: String,
}

/// Everything `dee compute` reports for one graph.
#[derive(Serialize)]
pub struct ReportDocument {
    pub graph: GraphSection,
    pub profile: ProfileSection,
    pub spectrum: SpectrumSection,
    pub dee: DeeValue,
    pub bounds: BoundsReport,
    pub provenance: Provenance,
}

pub fn build_report(
    g: &Graph,
    family: Option<String>,
    input_digest: String,
    max_sweeps: usize,
) -> Result<ReportDocument, dee_core::Error> {
    let profile = distance_profile(g)?;
    let spectrum = d_spectrum_of_matrix_bounded(profile.matrix(), max_sweeps)?;
    let bounds = bounds_report_from_parts(&profile, &spectrum)?;
    Ok(ReportDocument {
        graph: GraphSection { n: g.n(), m: g.edge_count(), family },
        profile: ProfileSection {
            wiener: profile.wiener(),
            geometric_mean: profile.geo_mean(),
            diameter: profile.diameter(),
            distance_degrees: profile.distance_degrees().to_vec(),
            distance_degree_regular: is_distance_degree_regular(&profile),
        },
        spectrum: spectrum_section(&spectrum),
        dee: bounds.dee,
        bounds,
        provenance: Provenance {
            version: env!("CARGO_PKG_VERSION").to_string(),
            input_digest,
        },
    })
}

fn spectrum_section(s: &DSpectrum) -> SpectrumSection {
    SpectrumSection {
        eigenvalues: s.eigenvalues().to_vec(),
        n_plus: s.n_plus(),
        n_zero: s.n_zero(),
        n_minus: s.n_minus(),
    }
}

pub fn render_json(report: &ReportDocument) -> String {
    let mut out = serde_json::to_string_pretty(report).expect("report serializes");
    out.push('\n');
    out
}

/// `x` with `digits` significant digits, falling back to scientific
/// notation outside a readable magnitude window.
pub fn format_sig(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let digits = digits.max(1);
    let mag = x.abs().log10().floor() as i32;
    if mag < -4 || mag >= digits as i32 {
        format!("{:.*e}", digits - 1, x)
    } else {
        let decimals = (digits as i32 - 1 - mag).max(0) as usize;
        format!("{:.*}", decimals, x)
    }
}

/// Collapsed value when it is representable, `c + e^x` split form once it
/// is not.
pub fn format_split(s: &SplitExp, digits: usize) -> String {
    let v = s.value();
    if v.is_finite() {
        format_sig(v, digits)
    } else {
        format!(
            "{} + e^{}",
            format_sig(s.remainder, digits),
            format_sig(s.exponent, digits)
        )
    }
}

fn format_list<T, F: Fn(&T) -> String>(items: &[T], f: F) -> String {
    let parts: Vec<String> = items.iter().map(f).collect();
    format!("[{}]", parts.join(", "))
}

pub fn render_table(report: &ReportDocument, digits: usize) -> String {
    let mut out = String::new();
    let mut row = |key: &str, value: String| {
        let _ = writeln!(out, "{key:<22} {value}");
    };
    let g = &report.graph;
    match &g.family {
        Some(f) => row("graph", format!("n = {}, m = {} ({f})", g.n, g.m)),
        None => row("graph", format!("n = {}, m = {}", g.n, g.m)),
    }
    let p = &report.profile;
    row("wiener", p.wiener.to_string());
    row("geometric mean", format_sig(p.geometric_mean, digits));
    row("diameter", p.diameter.to_string());
    row("distance degrees", format_list(&p.distance_degrees, u64::to_string));
    row(
        "degree regular",
        match p.distance_degree_regular {
            Some(r) => format!("yes, r = {r}"),
            None => "no".to_string(),
        },
    );
    let s = &report.spectrum;
    row("eigenvalues", format_list(&s.eigenvalues, |m| format_sig(*m, digits)));
    row(
        "signature",
        format!("{} positive, {} zero, {} negative", s.n_plus, s.n_zero, s.n_minus),
    );
    row(
        "distance estrada",
        format!(
            "{} ({} + e^{})",
            format_sig(report.dee.value, digits),
            format_sig(report.dee.split.remainder, digits),
            format_sig(report.dee.split.exponent, digits)
        ),
    );
    let b = &report.bounds;
    row("mu1 >= (wiener)", format_sig(b.mu1_from_wiener, digits));
    row("mu1 >= (degrees)", format_sig(b.mu1_from_degrees, digits));
    row("lower (prior)", format_split(&b.lower_prior, digits));
    row("lower", format_split(&b.lower, digits));
    row("lower (spectral)", format_split(&b.lower_spectral, digits));
    row("upper", format_split(&b.upper, digits));
    row("upper (prior)", format_split(&b.upper_prior, digits));
    if let Some(r) = &b.regular {
        row("regular lower", format_split(&r.lower, digits));
        row("regular upper", format_split(&r.upper, digits));
    }
    row(
        "equality",
        format!("lower = {}, upper = {}", b.equality_lower, b.equality_upper),
    );
    row(
        "provenance",
        format!(
            "dee {} / sha256:{}",
            report.provenance.version, report.provenance.input_digest
        ),
    );
    out
}
