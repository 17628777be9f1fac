//! Shared fixtures and independent oracles for the integration suites.
#![allow(dead_code)]

use dee_core::{is_connected, Graph};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;
use std::sync::OnceLock;

/// All unordered vertex pairs of an n-vertex graph.
pub fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Every connected labeled graph on exactly `n ≤ 6` vertices, by
/// exhaustive enumeration of edge subsets.
pub fn all_connected_graphs(n: usize) -> Vec<Graph> {
    let pairs = vertex_pairs(n);
    assert!(pairs.len() <= 20, "enumeration is meant for small n");
    (0u32..1 << pairs.len())
        .filter_map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            let g = Graph::new(n, edges).unwrap();
            is_connected(&g).then_some(g)
        })
        .collect()
}

/// `count` distinct connected labeled graphs on `n` vertices, sampled
/// with a fixed-seed RNG so runs are reproducible.
pub fn sample_connected_graphs(n: usize, count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs = vertex_pairs(n);
    let mut seen: HashSet<Vec<(usize, usize)>> = HashSet::new();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let p = rng.random_range(0.15..0.85);
        let edges = pairs.iter().filter(|_| rng.random_bool(p)).copied();
        let g = Graph::new(n, edges).unwrap();
        if is_connected(&g) && seen.insert(g.edges().to_vec()) {
            out.push(g);
        }
    }
    out
}

/// One representative per isomorphism class of trees on `1..=n_max`
/// vertices, grown by leaf attachment and deduplicated by canonical form.
pub fn all_trees_up_to(n_max: usize) -> Vec<Graph> {
    let mut all = vec![Graph::new(1, []).unwrap()];
    let mut level: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    for n in 2..=n_max {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for edges in &level {
            for attach in 0..n - 1 {
                let mut grown = edges.clone();
                grown.push((attach, n - 1));
                if seen.insert(tree_canonical(n, &grown)) {
                    next.push(grown);
                }
            }
        }
        all.extend(next.iter().map(|e| Graph::new(n, e.clone()).unwrap()));
        level = next;
    }
    all
}

/// Canonical form of a free tree: the smaller of the rooted canonical
/// strings taken over the tree's one or two centers.
fn tree_canonical(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    centers(n, &adj)
        .into_iter()
        .map(|c| rooted_canonical(c, usize::MAX, &adj))
        .min()
        .unwrap()
}

/// Tree centers by repeated leaf stripping.
fn centers(n: usize, adj: &[Vec<usize>]) -> Vec<usize> {
    if n == 1 {
        return vec![0];
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            degree[leaf] = 0;
            for &u in &adj[leaf] {
                if degree[u] > 0 {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    layer
}

fn rooted_canonical(v: usize, parent: usize, adj: &[Vec<usize>]) -> String {
    let mut children: Vec<String> = adj[v]
        .iter()
        .filter(|&&u| u != parent)
        .map(|&u| rooted_canonical(u, v, adj))
        .collect();
    children.sort();
    format!("({})", children.concat())
}

/// Wiener index of a tree by the edge-cut oracle: each edge contributes
/// the product of the two component sizes left after its removal.
pub fn tree_wiener_edge_cut(g: &Graph) -> u64 {
    let n = g.n();
    let mut total = 0u64;
    for &cut in g.edges() {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in g.edges().iter().filter(|&&e| e != cut) {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; n];
        seen[cut.0] = true;
        let mut stack = vec![cut.0];
        let mut size = 1u64;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    size += 1;
                    stack.push(v);
                }
            }
        }
        total += size * (n as u64 - size);
    }
    total
}

/// Number of simple cycles of length `len` in `g`.
pub fn count_cycles(g: &Graph, len: usize) -> usize {
    let adj = g.adjacency();
    let mut count = 0usize;
    let mut visited = vec![false; g.n()];
    // Paths are anchored at their smallest vertex, so each cycle is seen
    // once per direction; halve at the end.
    fn dfs(
        start: usize,
        cur: usize,
        depth: usize,
        len: usize,
        adj: &[Vec<usize>],
        visited: &mut [bool],
        count: &mut usize,
    ) {
        if depth == len - 1 {
            if adj[cur].contains(&start) {
                *count += 1;
            }
            return;
        }
        for &next in &adj[cur] {
            if next > start && !visited[next] {
                visited[next] = true;
                dfs(start, next, depth + 1, len, adj, visited, count);
                visited[next] = false;
            }
        }
    }
    for s in 0..g.n() {
        visited[s] = true;
        dfs(s, s, 0, len, &adj, &mut visited, &mut count);
        visited[s] = false;
    }
    count / 2
}

/// Eigenvalues of a symmetric 4×4 integer matrix through its exact
/// characteristic polynomial: integer power sums give the coefficients
/// via Newton's identities, then the four real roots are isolated by the
/// derivative chain and bisection. Independent of the Jacobi path.
pub fn quartic_char_poly_eigenvalues(m: &[[i64; 4]; 4]) -> Vec<f64> {
    let mut pow = [[0i128; 4]; 4];
    for (i, row) in pow.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            *x = m[i][j] as i128;
        }
    }
    let mut p = [0i128; 5];
    for (k, power_sum) in p.iter_mut().enumerate().skip(1) {
        if k > 1 {
            pow = int_matmul(&pow, m);
        }
        *power_sum = (0..4).map(|i| pow[i][i]).sum();
    }
    let e1 = p[1];
    let e2 = (e1 * p[1] - p[2]) / 2;
    let e3 = (e2 * p[1] - e1 * p[2] + p[3]) / 3;
    let e4 = (e3 * p[1] - e2 * p[2] + e1 * p[3] - p[4]) / 4;
    // x⁴ - e1·x³ + e2·x² - e3·x + e4, low coefficient first.
    let coeffs = [e4 as f64, -(e3 as f64), e2 as f64, -(e1 as f64), 1.0];
    let mut roots = poly_real_roots(&coeffs);
    roots.sort_by(|a, b| b.partial_cmp(a).unwrap());
    roots
}

fn int_matmul(a: &[[i128; 4]; 4], b: &[[i64; 4]; 4]) -> [[i128; 4]; 4] {
    let mut out = [[0i128; 4]; 4];
    for i in 0..4 {
        for l in 0..4 {
            for j in 0..4 {
                out[i][j] += a[i][l] * b[l][j] as i128;
            }
        }
    }
    out
}

fn poly_eval(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

/// All real roots (with multiplicity) of a polynomial known to have only
/// real roots, low coefficient first, leading coefficient nonzero.
fn poly_real_roots(coeffs: &[f64]) -> Vec<f64> {
    let degree = coeffs.len() - 1;
    match degree {
        0 => Vec::new(),
        1 => vec![-coeffs[0] / coeffs[1]],
        2 => {
            let (a, b, c) = (coeffs[2], coeffs[1], coeffs[0]);
            // All-real assumption: a slightly negative discriminant is a
            // double root blurred by rounding.
            let sq = (b * b - 4.0 * a * c).max(0.0).sqrt();
            let r1 = (-b - sq) / (2.0 * a);
            let r2 = (-b + sq) / (2.0 * a);
            vec![r1.min(r2), r1.max(r2)]
        }
        _ => {
            let derivative: Vec<f64> = (1..=degree).map(|i| coeffs[i] * i as f64).collect();
            let critical = poly_real_roots(&derivative);
            let bound = 1.0
                + coeffs[..degree].iter().map(|c| c.abs()).fold(0.0, f64::max)
                    / coeffs[degree].abs();
            let mut points = vec![-bound];
            points.extend(critical.iter().copied());
            points.push(bound);
            points.sort_by(|a, b| a.partial_cmp(b).unwrap());

            let mut roots = Vec::new();
            for w in points.windows(2) {
                let (lo, hi) = (w[0], w[1]);
                if lo < hi && poly_eval(coeffs, lo) * poly_eval(coeffs, hi) < 0.0 {
                    roots.push(bisect_root(coeffs, lo, hi));
                }
            }
            // Sign changes miss even-multiplicity roots; those sit at
            // critical points where the polynomial is (nearly) zero.
            let mut flattest = critical;
            flattest.sort_by(|&a, &b| {
                poly_eval(coeffs, a)
                    .abs()
                    .partial_cmp(&poly_eval(coeffs, b).abs())
                    .unwrap()
            });
            let mut k = 0;
            while roots.len() < degree && !flattest.is_empty() {
                roots.push(flattest[k % flattest.len()]);
                k += 1;
            }
            roots
        }
    }
}

fn bisect_root(coeffs: &[f64], mut lo: f64, mut hi: f64) -> f64 {
    let mut f_lo = poly_eval(coeffs, lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = poly_eval(coeffs, mid);
        if f_mid == 0.0 {
            return mid;
        }
        if (f_lo < 0.0) == (f_mid < 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Fixed-seed corpus shared by the acceptance criteria: every connected
/// labeled graph on up to 6 vertices, 3000 distinct sampled 7-vertex
/// connected graphs, and one tree per isomorphism class up to 9 vertices.
pub struct Corpus {
    /// Distinct connected graphs on ≤ 7 vertices.
    pub small_graphs: Vec<Graph>,
    /// Trees on ≤ 9 vertices, one per isomorphism class.
    pub trees: Vec<Graph>,
}

pub fn corpus() -> &'static Corpus {
    static CORPUS: OnceLock<Corpus> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let mut small_graphs = Vec::new();
        for n in 1..=6 {
            small_graphs.extend(all_connected_graphs(n));
        }
        small_graphs.extend(sample_connected_graphs(7, 3000, 0x5EED_CAFE));
        Corpus { small_graphs, trees: all_trees_up_to(9) }
    })
}

/// `|a - b| ≤ tol · max(1, |a|, |b|)`: relative closeness with an
/// absolute floor at 1 so zero-valued quantities compare sanely.
pub fn within_rel(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}
