//! Symmetric eigendecomposition and the distance Estrada index.
//!
//! The solver is a cyclic Jacobi iteration with row-cyclic sweep order:
//! adequate to the matrix sizes here (n ≤ a few hundred), dependency-free,
//! and convergent for every symmetric matrix. Cycles additionally get a
//! circulant closed form that serves as an independent oracle for the
//! Jacobi path.

use crate::distance::{distance_matrix, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::Serialize;
use std::fmt;

/// Sweep budget for the Jacobi iteration.
pub const DEFAULT_MAX_SWEEPS: usize = 100;
/// Converged when `off(A)_F ≤ CONVERGENCE_FACTOR · ‖A‖_F`.
const CONVERGENCE_FACTOR: f64 = 1e-12;
/// Entries below this magnitude are not worth a rotation.
const ROTATION_THRESHOLD: f64 = 1e-300;
/// Absolute symmetry tolerance on eigensolver input.
const SYMMETRY_TOLERANCE: f64 = 1e-12;
/// Eigenvalues within `ZERO_BAND_FACTOR · max(1, μ₁)` of zero count as zero.
const ZERO_BAND_FACTOR: f64 = 1e-7;

/// Eigenvalues of a symmetric matrix, sorted non-increasing.
///
/// Fails with [`Error::NotSymmetric`] when `|a_ij - a_ji| > 1e-12`, and with
/// [`Error::NoConvergence`] if the off-diagonal Frobenius norm has not
/// fallen below `1e-12 · ‖A‖_F` after [`DEFAULT_MAX_SWEEPS`] sweeps.
pub fn eigen_symmetric(rows: &[Vec<f64>]) -> Result<Vec<f64>> {
    eigen_symmetric_bounded(rows, DEFAULT_MAX_SWEEPS)
}

/// [`eigen_symmetric`] with an explicit sweep budget.
pub fn eigen_symmetric_bounded(rows: &[Vec<f64>], max_sweeps: usize) -> Result<Vec<f64>> {
    let a = check_symmetric(rows)?;
    let mut values = jacobi_eigenvalues(a, rows.len(), max_sweeps, None)?;
    sort_non_increasing(&mut values);
    Ok(values)
}

fn check_symmetric(rows: &[Vec<f64>]) -> Result<Vec<f64>> {
    let n = rows.len();
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotSquare { rows: n, row: i, len: row.len() });
        }
    }
    for (i, row) in rows.iter().enumerate() {
        for j in i + 1..n {
            let delta = (row[j] - rows[j][i]).abs();
            if delta > SYMMETRY_TOLERANCE {
                return Err(Error::NotSymmetric { i, j, delta });
            }
        }
    }
    Ok(rows.iter().flatten().copied().collect())
}

/// Cyclic Jacobi on a flattened dense matrix. Returns the unsorted
/// diagonal; `vectors`, when given, accumulates the rotations so column k
/// is the eigenvector of eigenvalue k (used by the residual tests).
fn jacobi_eigenvalues(
    mut a: Vec<f64>,
    n: usize,
    max_sweeps: usize,
    mut vectors: Option<&mut Vec<f64>>,
) -> Result<Vec<f64>> {
    if let Some(v) = vectors.as_deref_mut() {
        v.clear();
        v.resize(n * n, 0.0);
        for i in 0..n {
            v[i * n + i] = 1.0;
        }
    }
    if n < 2 {
        return Ok(a);
    }

    // The Frobenius norm is invariant under the rotations, so the
    // convergence threshold is fixed once.
    let fro: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let tol = CONVERGENCE_FACTOR * fro;

    for _ in 0..max_sweeps {
        let off: f64 = off_diagonal_norm(&a, n);
        if off <= tol {
            return Ok(diagonal(&a, n));
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() < ROTATION_THRESHOLD {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    // Avoids theta² overflow; the limit of the closed form.
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + theta.hypot(1.0))
                };
                let c = 1.0 / t.hypot(1.0);
                let s = t * c;
                rotate(&mut a, n, p, q, c, s);
                if let Some(v) = vectors.as_deref_mut() {
                    for k in 0..n {
                        let vkp = v[k * n + p];
                        let vkq = v[k * n + q];
                        v[k * n + p] = c * vkp - s * vkq;
                        v[k * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
    }

    if off_diagonal_norm(&a, n) <= tol {
        return Ok(diagonal(&a, n));
    }
    Err(Error::NoConvergence { sweeps: max_sweeps })
}

/// Applies the plane rotation annihilating `a[p][q]`, preserving symmetry.
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize, c: f64, s: f64) {
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let apq = a[p * n + q];
    a[p * n + p] = c * c * app - 2.0 * s * c * apq + s * s * aqq;
    a[q * n + q] = s * s * app + 2.0 * s * c * apq + c * c * aqq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        let new_p = c * akp - s * akq;
        let new_q = s * akp + c * akq;
        a[k * n + p] = new_p;
        a[p * n + k] = new_p;
        a[k * n + q] = new_q;
        a[q * n + k] = new_q;
    }
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for p in 0..n {
        for q in 0..n {
            if p != q {
                sum += a[p * n + q] * a[p * n + q];
            }
        }
    }
    sum.sqrt()
}

fn diagonal(a: &[f64], n: usize) -> Vec<f64> {
    (0..n).map(|i| a[i * n + i]).collect()
}

fn sort_non_increasing(values: &mut [f64]) {
    values.sort_unstable_by(|x, y| y.partial_cmp(x).expect("eigenvalues are finite"));
}

/// The D-spectrum: eigenvalues of the distance matrix with sign counts.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DSpectrum {
    eigenvalues: Vec<f64>,
    n_plus: usize,
    n_zero: usize,
    n_minus: usize,
}

impl DSpectrum {
    /// Sorts the eigenvalues non-increasing and classifies signs against
    /// the zero band `1e-7 · max(1, μ₁)`.
    pub fn classify(mut eigenvalues: Vec<f64>) -> Self {
        sort_non_increasing(&mut eigenvalues);
        let mu1 = eigenvalues.first().copied().unwrap_or(0.0);
        let band = ZERO_BAND_FACTOR * mu1.max(1.0);
        let n_plus = eigenvalues.iter().filter(|&&m| m > band).count();
        let n_zero = eigenvalues.iter().filter(|&&m| m.abs() <= band).count();
        let n_minus = eigenvalues.len() - n_plus - n_zero;
        DSpectrum { eigenvalues, n_plus, n_zero, n_minus }
    }

    /// Eigenvalues in non-increasing order.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Largest eigenvalue (0 for an empty spectrum).
    pub fn mu1(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }

    pub fn n_plus(&self) -> usize {
        self.n_plus
    }

    pub fn n_zero(&self) -> usize {
        self.n_zero
    }

    pub fn n_minus(&self) -> usize {
        self.n_minus
    }
}

/// D-spectrum of a connected graph.
pub fn d_spectrum(g: &Graph) -> Result<DSpectrum> {
    d_spectrum_bounded(g, DEFAULT_MAX_SWEEPS)
}

/// [`d_spectrum`] with an explicit Jacobi sweep budget.
pub fn d_spectrum_bounded(g: &Graph, max_sweeps: usize) -> Result<DSpectrum> {
    let m = distance_matrix(g)?;
    d_spectrum_of_matrix_bounded(&m, max_sweeps)
}

/// D-spectrum from an already computed distance matrix.
pub fn d_spectrum_of_matrix(m: &DistanceMatrix) -> Result<DSpectrum> {
    d_spectrum_of_matrix_bounded(m, DEFAULT_MAX_SWEEPS)
}

/// [`d_spectrum_of_matrix`] with an explicit Jacobi sweep budget.
pub fn d_spectrum_of_matrix_bounded(m: &DistanceMatrix, max_sweeps: usize) -> Result<DSpectrum> {
    let n = m.n();
    let a: Vec<f64> = (0..n)
        .flat_map(|i| m.row(i).iter().map(|&d| f64::from(d)))
        .collect();
    let values = jacobi_eigenvalues(a, n, max_sweeps, None)?;
    Ok(DSpectrum::classify(values))
}

/// A value kept as `remainder + e^exponent`, with `remainder ≥ 0`.
///
/// Everything Estrada-index-flavored here is a sum of exponentials
/// dominated by one term, so this form stays meaningful even when the
/// plain f64 value would overflow.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SplitExp {
    pub remainder: f64,
    pub exponent: f64,
}

impl SplitExp {
    pub fn new(remainder: f64, exponent: f64) -> Self {
        SplitExp { remainder, exponent }
    }

    /// Collapsed value; +∞ once `e^exponent` leaves the f64 range.
    pub fn value(&self) -> f64 {
        self.remainder + self.exponent.exp()
    }

    /// Natural log of the value, finite even past the f64 range.
    ///
    /// `|ln a - ln b| ≤ ε` is first-order equivalent to relative closeness
    /// `|a - b| ≤ ε·b`, which is how bound comparisons use it.
    pub fn ln_value(&self) -> f64 {
        let v = self.value();
        if v.is_finite() && v > 0.0 {
            v.ln()
        } else if self.remainder == 0.0 {
            self.exponent
        } else {
            self.exponent + (self.remainder * (-self.exponent).exp()).ln_1p()
        }
    }
}

impl fmt::Display for SplitExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + e^{}", self.remainder, self.exponent)
    }
}

/// The distance Estrada index `Σ exp(μ_i)` in both plain and split form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DeeValue {
    /// Direct sum; +∞ sentinel when `e^μ₁` overflows (split stays exact).
    pub value: f64,
    /// `remainder + e^μ₁` with `remainder = Σ_{i≥2} exp(μ_i)`.
    pub split: SplitExp,
}

impl DeeValue {
    /// Natural log of the index, finite even past the f64 range.
    pub fn ln_value(&self) -> f64 {
        self.split.ln_value()
    }
}

/// Distance Estrada index of a spectrum.
///
/// The exponentials are accumulated in ascending order of the eigenvalues
/// (smallest magnitudes first), which keeps the tail from being lost
/// against the dominant `e^μ₁` term.
pub fn dee(spectrum: &DSpectrum) -> DeeValue {
    let eigenvalues = spectrum.eigenvalues();
    let remainder: f64 = eigenvalues.iter().skip(1).rev().map(|&m| m.exp()).sum();
    let exponent = if eigenvalues.is_empty() {
        f64::NEG_INFINITY
    } else {
        spectrum.mu1()
    };
    let split = SplitExp::new(remainder, exponent);
    DeeValue { value: split.value(), split }
}

/// Distance spectrum of the n-cycle from the circulant closed form:
/// `μ_j = Σ_{k=1}^{n-1} min(k, n-k) · cos(2πjk/n)`, sorted non-increasing.
pub fn cycle_spectrum_closed_form(n: usize) -> Result<Vec<f64>> {
    if n < 3 {
        return Err(Error::InvalidParameter { family: "cycle", value: n, min: 3 });
    }
    let mut values: Vec<f64> = (0..n)
        .map(|j| {
            (1..n)
                .map(|k| {
                    let d = k.min(n - k) as f64;
                    // jk reduced mod n keeps the cos argument small.
                    let angle = 2.0 * std::f64::consts::PI * ((j * k) % n) as f64 / n as f64;
                    d * angle.cos()
                })
                .sum()
        })
        .collect();
    sort_non_increasing(&mut values);
    Ok(values)
}
