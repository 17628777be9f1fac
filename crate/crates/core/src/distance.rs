//! All-pairs shortest paths and the distance-based scalar invariants.
//!
//! Distances are exact integers from per-vertex breadth-first search; the
//! aggregates (distance degrees, Wiener index, spectral moments) stay in
//! integer arithmetic. Only the geometric mean is floating point, computed
//! in log space so products like 278⁶⁰ cannot overflow.

use crate::error::{Error, Result};
use crate::graph::Graph;
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use std::collections::VecDeque;
use std::num::NonZeroU32;

/// Symmetric matrix of shortest-path hop counts, zero diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.d[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.d[i * self.n..(i + 1) * self.n]
    }

    /// Row sum `D_i`, the distance degree (transmission) of vertex `i`.
    pub fn row_sum(&self, i: usize) -> u64 {
        self.row(i).iter().map(|&d| u64::from(d)).sum()
    }

    /// The matrix as dense f64 rows, for the eigensolver.
    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| self.row(i).iter().map(|&d| f64::from(d)).collect())
            .collect()
    }
}

/// BFS hop distances between all vertex pairs.
///
/// Fails with [`Error::Disconnected`] when some pair is unreachable.
pub fn distance_matrix(g: &Graph) -> Result<DistanceMatrix> {
    let n = g.n();
    let adj = g.adjacency();
    let mut d = vec![0u32; n * n];
    let mut dist = vec![u32::MAX; n];
    for s in 0..n {
        dist.fill(u32::MAX);
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if dist[v] == u32::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        if dist.contains(&u32::MAX) {
            return Err(Error::Disconnected);
        }
        d[s * n..(s + 1) * n].copy_from_slice(&dist);
    }
    Ok(DistanceMatrix { n, d })
}

/// Distance matrix with its derived scalars.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceProfile {
    matrix: DistanceMatrix,
    degrees: Vec<u64>,
    wiener: u64,
    geo_mean: f64,
    diameter: u32,
}

impl DistanceProfile {
    pub fn n(&self) -> usize {
        self.matrix.n()
    }

    pub fn matrix(&self) -> &DistanceMatrix {
        &self.matrix
    }

    /// Distance degrees `D_i = Σ_j d_ij`.
    pub fn distance_degrees(&self) -> &[u64] {
        &self.degrees
    }

    /// Wiener index `W = Σ_{i<j} d_ij = ½ Σ_i D_i`.
    pub fn wiener(&self) -> u64 {
        self.wiener
    }

    /// Geometric mean of the distance degrees; 0 for the one-vertex graph.
    pub fn geo_mean(&self) -> f64 {
        self.geo_mean
    }

    /// Largest pairwise distance.
    pub fn diameter(&self) -> u32 {
        self.diameter
    }
}

/// Computes the [`DistanceProfile`] of a connected graph.
pub fn distance_profile(g: &Graph) -> Result<DistanceProfile> {
    let matrix = distance_matrix(g)?;
    Ok(profile_of_matrix(matrix))
}

pub(crate) fn profile_of_matrix(matrix: DistanceMatrix) -> DistanceProfile {
    let n = matrix.n();
    let degrees: Vec<u64> = (0..n).map(|i| matrix.row_sum(i)).collect();
    let wiener = degrees.iter().sum::<u64>() / 2;
    let diameter = *matrix.d.iter().max().expect("n >= 1");
    let geo_mean = if n == 1 {
        // Single vertex: D_1 = 0 and the profile degenerates to W = 0, Δ = 0.
        0.0
    } else {
        let log_sum: f64 = degrees.iter().map(|&d| (d as f64).ln()).sum();
        (log_sum / n as f64).exp()
    };
    DistanceProfile { matrix, degrees, wiener, geo_mean, diameter }
}

/// `k`-th spectral moment of the distance matrix, `N_k = trace(Dᵏ)`.
///
/// `N_1 = 0` and `N_2 = 2 Σ_{i<j} d_ij²` come from closed forms; higher
/// moments go through exact big-integer matrix powers before the final
/// conversion to f64.
pub fn spectral_moment(profile: &DistanceProfile, k: NonZeroU32) -> f64 {
    let m = profile.matrix();
    match k.get() {
        1 => 0.0,
        2 => {
            let sum: u128 = (0..m.n())
                .flat_map(|i| m.row(i).iter().map(|&d| u128::from(d) * u128::from(d)))
                .sum();
            sum as f64
        }
        k => {
            let n = m.n();
            let base: Vec<BigUint> = m.d.iter().map(|&d| BigUint::from(d)).collect();
            let mut power = base.clone();
            for _ in 2..=k {
                power = big_matmul(&power, &base, n);
            }
            let trace: BigUint = (0..n).map(|i| power[i * n + i].clone()).sum();
            trace.to_f64().unwrap_or(f64::INFINITY)
        }
    }
}

fn big_matmul(a: &[BigUint], b: &[BigUint], n: usize) -> Vec<BigUint> {
    let mut out = vec![BigUint::ZERO; n * n];
    for i in 0..n {
        for l in 0..n {
            let ail = &a[i * n + l];
            if ail == &BigUint::ZERO {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += ail * &b[l * n + j];
            }
        }
    }
    out
}

/// Returns `r` when every distance degree equals `r`.
pub fn is_distance_degree_regular(profile: &DistanceProfile) -> Option<u64> {
    let first = profile.distance_degrees()[0];
    profile
        .distance_degrees()
        .iter()
        .all(|&d| d == first)
        .then_some(first)
}
