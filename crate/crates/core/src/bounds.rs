//! Lower and upper bounds on the distance Estrada index.
//!
//! The central quantity is [`dee_floor`]: with trace zero and largest
//! eigenvalue `x`, the exponential sum `Σ exp(μ_i)` over `n` eigenvalues
//! is minimized by spreading the rest evenly, giving
//! `e^x + (n-1)·e^{-x/(n-1)}`. Feeding it lower bounds on `μ₁` — from the
//! distance degrees, or more coarsely from the Wiener index and the
//! geometric mean of the degrees — yields computable lower bounds on the
//! index. The upper bounds come from the second spectral moment via
//! `N₂ ≤ 2ΔW` and from the diameter alone.
//!
//! All bound values are carried as [`SplitExp`] so graphs large enough to
//! push `e^x` past the f64 range still report exact exponent/remainder
//! pairs; comparisons then go through `ln_value`.

use crate::distance::{is_distance_degree_regular, DistanceProfile};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::{d_spectrum_of_matrix, dee, DSpectrum, DeeValue, SplitExp};
use serde::Serialize;

/// Relative tolerance for the equality-case flags: Jacobi eigenvalues
/// carry rounding, so exact comparison would never fire.
pub const EQUALITY_REL_TOL: f64 = 1e-9;

/// `e^x + (n-1)·e^{-x/(n-1)}` for `n ≥ 2`; the limit `e^x` for `n = 1`.
///
/// Strictly increasing in `x` on `[0, ∞)`; rejects negative `x`.
pub fn dee_floor(x: f64, n: usize) -> Result<f64> {
    Ok(dee_floor_split(x, n)?.value())
}

fn dee_floor_split(x: f64, n: usize) -> Result<SplitExp> {
    if x < 0.0 {
        return Err(Error::NegativeArgument { x });
    }
    let remainder = if n == 1 {
        0.0
    } else {
        let tail = (n - 1) as f64;
        tail * (-x / tail).exp()
    };
    Ok(SplitExp::new(remainder, x))
}

/// Lower bound on `μ₁` from the distance degrees: `√(Σ D_i² / n)`.
pub fn mu1_lower_bound_degrees(degrees: &[u64]) -> f64 {
    let n = degrees.len() as f64;
    let sum: f64 = degrees.iter().map(|&d| (d as f64) * (d as f64)).sum();
    (sum / n).sqrt()
}

/// Lower bound on `μ₁` from the Wiener index and the geometric mean of
/// the distance degrees: `√((4W² - M²n) / (n(n-1)))`; 0 for `n = 1`.
///
/// `2W/n ≥ M` guarantees `4W² ≥ M²n²` for any real profile, so a negative
/// radicand signals inconsistent inputs.
pub fn mu1_lower_bound_wiener(wiener: f64, geo_mean: f64, n: usize) -> Result<f64> {
    if n == 1 {
        return Ok(0.0);
    }
    let radicand = 4.0 * wiener * wiener - geo_mean * geo_mean * n as f64;
    if radicand < 0.0 {
        return Err(Error::InconsistentProfile { wiener, geo_mean, n });
    }
    Ok((radicand / (n * (n - 1)) as f64).sqrt())
}

/// Main lower bound: [`dee_floor`] applied to [`mu1_lower_bound_wiener`].
/// Collapses to 1 for the one-vertex graph.
///
/// Equality holds exactly for complete graphs.
pub fn lower_bound(profile: &DistanceProfile) -> Result<SplitExp> {
    let x = mu1_lower_bound_wiener(profile.wiener() as f64, profile.geo_mean(), profile.n())?;
    dee_floor_split(x, profile.n())
}

/// Main upper bound: `n - 1 + e^√(2ΔW)`.
///
/// Equality holds only for the one-vertex graph.
pub fn upper_bound(profile: &DistanceProfile) -> SplitExp {
    let n = profile.n();
    let exponent = (2.0 * f64::from(profile.diameter()) * profile.wiener() as f64).sqrt();
    SplitExp::new((n - 1) as f64, exponent)
}

/// Intermediate lower bound [`dee_floor`]`(μ₁, n)`, tighter than
/// [`lower_bound`] because it uses the true `μ₁`.
pub fn spectral_lower_bound(mu1: f64, n: usize) -> Result<SplitExp> {
    dee_floor_split(mu1, n)
}

/// Earlier, coarser lower bound `e^{2W/n} + (n-1)·e^{-2W/(n(n-1))}`,
/// dominated by [`lower_bound`] since `2W/n ≤ √((4W² - M²n)/(n(n-1)))`.
pub fn prior_lower_bound(wiener: f64, n: usize) -> SplitExp {
    dee_floor_split(2.0 * wiener / n as f64, n).expect("2W/n is nonnegative")
}

/// Earlier, coarser upper bound `n - 1 + e^{Δ√(n(n-1))}`, dominated by
/// [`upper_bound`] since `2W ≤ n(n-1)Δ`.
pub fn prior_upper_bound(diameter: u32, n: usize) -> SplitExp {
    let exponent = f64::from(diameter) * ((n * (n - 1)) as f64).sqrt();
    SplitExp::new((n - 1) as f64, exponent)
}

/// Both bounds specialized to a distance-degree-regular graph, where the
/// main pair collapses to `e^r + (n-1)·e^{-r/(n-1)}` and
/// `n - 1 + e^√(Δnr)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RegularBounds {
    pub lower: SplitExp,
    pub upper: SplitExp,
}

/// Bounds for a graph whose distance degrees all equal `r`.
pub fn regular_bounds(r: f64, diameter: u32, n: usize) -> RegularBounds {
    let lower = dee_floor_split(r, n).expect("distance degrees are nonnegative");
    let exponent = (f64::from(diameter) * n as f64 * r).sqrt();
    RegularBounds { lower, upper: SplitExp::new((n - 1) as f64, exponent) }
}

/// Every bound beside the exact index, with equality-case flags.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsReport {
    /// Coarse Wiener-only lower bound.
    pub lower_prior: SplitExp,
    /// Main lower bound from `W` and `M`.
    pub lower: SplitExp,
    /// Tighter intermediate bound using the computed `μ₁`.
    pub lower_spectral: SplitExp,
    /// `μ₁ ≥ √((4W² - M²n)/(n(n-1)))`.
    pub mu1_from_wiener: f64,
    /// `μ₁ ≥ √(Σ D_i²/n)`, the sharper of the two `μ₁` bounds.
    pub mu1_from_degrees: f64,
    /// Main upper bound from `Δ` and `W`.
    pub upper: SplitExp,
    /// Coarse diameter-only upper bound.
    pub upper_prior: SplitExp,
    /// Present iff the graph is distance-degree regular.
    pub regular: Option<RegularBounds>,
    /// The exact distance Estrada index.
    pub dee: DeeValue,
    /// Lower bound attained (within [`EQUALITY_REL_TOL`] relative);
    /// happens exactly for complete graphs.
    pub equality_lower: bool,
    /// Upper bound attained; happens only for the one-vertex graph.
    pub equality_upper: bool,
}

/// Builds the [`BoundsReport`] from already computed pieces.
pub fn bounds_report_from_parts(
    profile: &DistanceProfile,
    spectrum: &DSpectrum,
) -> Result<BoundsReport> {
    let n = profile.n();
    let wiener = profile.wiener() as f64;
    let dee = dee(spectrum);
    let lower = lower_bound(profile)?;
    let upper = upper_bound(profile);
    let ln_dee = dee.ln_value();
    Ok(BoundsReport {
        lower_prior: prior_lower_bound(wiener, n),
        lower,
        lower_spectral: spectral_lower_bound(spectrum.mu1().max(0.0), n)?,
        mu1_from_wiener: mu1_lower_bound_wiener(wiener, profile.geo_mean(), n)?,
        mu1_from_degrees: mu1_lower_bound_degrees(profile.distance_degrees()),
        upper,
        upper_prior: prior_upper_bound(profile.diameter(), n),
        regular: is_distance_degree_regular(profile)
            .map(|r| regular_bounds(r as f64, profile.diameter(), n)),
        dee,
        equality_lower: (ln_dee - lower.ln_value()).abs() <= EQUALITY_REL_TOL,
        equality_upper: (ln_dee - upper.ln_value()).abs() <= EQUALITY_REL_TOL,
    })
}

/// Computes profile, spectrum, exact index, and all bounds for `g`.
pub fn bounds_report(g: &Graph) -> Result<BoundsReport> {
    let profile = crate::distance::distance_profile(g)?;
    let spectrum = d_spectrum_of_matrix(profile.matrix())?;
    bounds_report_from_parts(&profile, &spectrum)
}
