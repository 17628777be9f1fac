//! Distance-matrix invariants of simple connected graphs.
//!
//! The pipeline runs from a [`Graph`] (edge list) through its all-pairs
//! shortest-path matrix to the classical distance-based descriptors:
//!
//! * [`distance_profile`] — distance degrees, Wiener index, geometric mean
//!   of the distance degrees, diameter;
//! * [`d_spectrum`] — eigenvalues of the distance matrix (the D-spectrum),
//!   computed with a cyclic Jacobi solver;
//! * [`dee`] — the distance Estrada index `Σ exp(μ_i)` over the D-spectrum,
//!   kept in split form `c + e^μ₁` so values past the f64 range stay exact;
//! * [`bounds_report`] — lower and upper bounds on the distance Estrada
//!   index in terms of the Wiener index, diameter, and distance degrees,
//!   together with equality-case detection.
//!
//! Graphs are 0-indexed and immutable after construction; every function
//! here is pure, so concurrent use on shared references is safe.

pub mod bounds;
pub mod distance;
mod error;
pub mod graph;
pub mod spectral;

pub use bounds::{
    bounds_report, bounds_report_from_parts, dee_floor, mu1_lower_bound_degrees,
    mu1_lower_bound_wiener, prior_lower_bound, prior_upper_bound, regular_bounds,
    spectral_lower_bound, BoundsReport, RegularBounds, EQUALITY_REL_TOL,
};
pub use distance::{
    distance_matrix, distance_profile, is_distance_degree_regular, spectral_moment,
    DistanceMatrix, DistanceProfile,
};
pub use error::{Error, GraphError, ParseError, ParseErrorKind, Result};
pub use graph::{generate, is_connected, parse_graph, serialize_graph, Graph, GraphFamily};
pub use spectral::{
    cycle_spectrum_closed_form, d_spectrum, d_spectrum_bounded, d_spectrum_of_matrix,
    d_spectrum_of_matrix_bounded, dee, eigen_symmetric, eigen_symmetric_bounded, DSpectrum,
    DeeValue, SplitExp, DEFAULT_MAX_SWEEPS,
};
