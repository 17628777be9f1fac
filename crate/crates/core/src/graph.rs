//! Simple undirected graphs: construction, text interchange, named families.
//!
//! The text format is one header line `<n> <m>` followed by exactly `m`
//! edge lines `<u> <v>`, 0-indexed, newline-terminated. Serialization is
//! canonical: each edge once, smaller endpoint first, lexicographically
//! sorted, so `parse(serialize(g)) == g`.

use crate::error::{Error, GraphError, ParseError, ParseErrorKind, Result};
use std::collections::VecDeque;
use std::fmt::Write as _;

/// A simple undirected graph on `n ≥ 1` vertices, indices `0..n`.
///
/// The edge list is stored canonically (smaller endpoint first, sorted,
/// no duplicates) and never mutated after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from an edge list, accepting endpoints in either
    /// order and rejecting self-loops, duplicates, and out-of-range
    /// indices.
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> std::result::Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::ZeroVertices);
        }
        let mut canonical = Vec::new();
        for (a, b) in edges {
            canonical.push(canonical_edge(n, a, b)?);
        }
        canonical.sort_unstable();
        for w in canonical.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge { u: w[0].0, v: w[0].1 });
            }
        }
        Ok(Graph { n, edges: canonical })
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list: `u < v`, lexicographically sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v || u >= self.n || v >= self.n {
            return false;
        }
        let e = (u.min(v), u.max(v));
        self.edges.binary_search(&e).is_ok()
    }

    /// True when every vertex pair is adjacent (includes the one-vertex graph).
    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * (self.n - 1) / 2
    }

    /// Neighbor lists for all vertices.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }
}

fn canonical_edge(n: usize, a: usize, b: usize) -> std::result::Result<(usize, usize), GraphError> {
    if a >= n {
        return Err(GraphError::VertexOutOfRange { index: a, n });
    }
    if b >= n {
        return Err(GraphError::VertexOutOfRange { index: b, n });
    }
    if a == b {
        return Err(GraphError::SelfLoop { vertex: a });
    }
    Ok((a.min(b), a.max(b)))
}

/// True when a breadth-first search from vertex 0 reaches every vertex.
/// A single vertex counts as connected.
pub fn is_connected(g: &Graph) -> bool {
    let adj = g.adjacency();
    let mut seen = vec![false; g.n()];
    seen[0] = true;
    let mut reached = 1;
    let mut queue = VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                reached += 1;
                queue.push_back(v);
            }
        }
    }
    reached == g.n()
}

/// Parses graph-file text. Endpoints may appear in either order; every
/// failure carries the offending 1-based line number.
pub fn parse_graph(text: &str) -> std::result::Result<Graph, ParseError> {
    let fail = |line, kind| ParseError { line, kind };
    let mut lines = text.lines().enumerate();

    let (_, header) = lines
        .next()
        .ok_or_else(|| fail(1, ParseErrorKind::MalformedHeader))?;
    let (n, m) = parse_pair(header).ok_or_else(|| fail(1, ParseErrorKind::MalformedHeader))?;
    if n == 0 {
        return Err(fail(1, ParseErrorKind::Graph(GraphError::ZeroVertices)));
    }

    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(m);
    for _ in 0..m {
        let (idx, raw) = lines.next().ok_or_else(|| {
            fail(
                m + 1,
                ParseErrorKind::EdgeCountMismatch { expected: m, found: edges.len() },
            )
        })?;
        let line = idx + 1;
        let (a, b) =
            parse_pair(raw).ok_or_else(|| fail(line, ParseErrorKind::MalformedEdge))?;
        let e = canonical_edge(n, a, b).map_err(|e| fail(line, ParseErrorKind::Graph(e)))?;
        if edges.contains(&e) {
            return Err(fail(
                line,
                ParseErrorKind::Graph(GraphError::DuplicateEdge { u: e.0, v: e.1 }),
            ));
        }
        edges.push(e);
    }

    for (idx, rest) in lines {
        if !rest.trim().is_empty() {
            return Err(fail(idx + 1, ParseErrorKind::TrailingContent));
        }
    }

    edges.sort_unstable();
    Ok(Graph { n, edges })
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut parts = line.split_whitespace();
    let a = parts.next()?.parse().ok()?;
    let b = parts.next()?.parse().ok()?;
    if parts.next().is_some() {
        return None;
    }
    Some((a, b))
}

/// Canonical graph-file text for `g`; inverse of [`parse_graph`].
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.n(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Named graph families with their parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFamily {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    Star(usize),
    /// The 5-vertex chemical tree with edges 0-1, 1-2, 2-3, 2-4
    /// (a path of length two with two extra leaves at one end).
    ChemicalTree5,
    /// The buckminsterfullerene graph: 60 vertices, 90 edges, 3-regular,
    /// 12 pentagonal and 20 hexagonal faces.
    TruncatedIcosahedron,
}

impl GraphFamily {
    /// Short display tag, e.g. `cycle(6)`.
    pub fn label(&self) -> String {
        match self {
            GraphFamily::Complete(n) => format!("complete({n})"),
            GraphFamily::Cycle(n) => format!("cycle({n})"),
            GraphFamily::Path(n) => format!("path({n})"),
            GraphFamily::Star(n) => format!("star({n})"),
            GraphFamily::ChemicalTree5 => "chemical-tree".to_string(),
            GraphFamily::TruncatedIcosahedron => "c60".to_string(),
        }
    }
}

/// Builds a member of a named family.
pub fn generate(family: GraphFamily) -> Result<Graph> {
    let graph = match family {
        GraphFamily::Complete(n) => {
            require(n, 1, "complete")?;
            let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::new(n, edges)
        }
        GraphFamily::Cycle(n) => {
            require(n, 3, "cycle")?;
            Graph::new(n, (0..n).map(|u| (u, (u + 1) % n)))
        }
        GraphFamily::Path(n) => {
            require(n, 1, "path")?;
            Graph::new(n, (1..n).map(|u| (u - 1, u)))
        }
        GraphFamily::Star(n) => {
            require(n, 1, "star")?;
            Graph::new(n, (1..n).map(|v| (0, v)))
        }
        GraphFamily::ChemicalTree5 => Graph::new(5, [(0, 1), (1, 2), (2, 3), (2, 4)]),
        GraphFamily::TruncatedIcosahedron => truncated_icosahedron(),
    };
    Ok(graph.expect("family construction yields a valid simple graph"))
}

fn require(n: usize, min: usize, family: &'static str) -> Result<()> {
    if n < min {
        return Err(Error::InvalidParameter { family, value: n, min });
    }
    Ok(())
}

/// Icosahedron rotation system: the five neighbors of each vertex in
/// cyclic order around it. Vertex 0 is one pole, 1..=5 the upper ring,
/// 6..=10 the lower ring, 11 the other pole; consecutive entries in each
/// row span a triangular face.
const ICOSAHEDRON_ROTATION: [[usize; 5]; 12] = [
    [1, 2, 3, 4, 5],
    [0, 2, 7, 6, 5],
    [0, 3, 8, 7, 1],
    [0, 4, 9, 8, 2],
    [0, 5, 10, 9, 3],
    [0, 1, 6, 10, 4],
    [11, 7, 1, 5, 10],
    [11, 8, 2, 1, 6],
    [11, 9, 3, 2, 7],
    [11, 10, 4, 3, 8],
    [11, 6, 5, 4, 9],
    [6, 7, 8, 9, 10],
];

/// Truncates the icosahedron combinatorially. Each (vertex, incident edge)
/// pair becomes one of the 60 new vertices; consecutive pairs around a
/// vertex form its pentagon, and the two pairs of each original edge are
/// joined, turning every triangular face into a hexagon.
fn truncated_icosahedron() -> std::result::Result<Graph, GraphError> {
    let rot = &ICOSAHEDRON_ROTATION;
    let flag = |v: usize, k: usize| v * 5 + k;
    let mut edges = Vec::with_capacity(90);
    for v in 0..12 {
        for k in 0..5 {
            edges.push((flag(v, k), flag(v, (k + 1) % 5)));
            let w = rot[v][k];
            if v < w {
                let j = rot[w]
                    .iter()
                    .position(|&x| x == v)
                    .expect("rotation table is symmetric");
                edges.push((flag(v, k), flag(w, j)));
            }
        }
    }
    Graph::new(60, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_smallest_connected_graph() {
        let g = parse_graph("2 1\n0 1\n").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn parse_hexagon() {
        let g = parse_graph("6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n").unwrap();
        assert_eq!(g, generate(GraphFamily::Cycle(6)).unwrap());
    }

    #[test]
    fn parse_rejects_self_loop_with_line_number() {
        let err = parse_graph("3 3\n0 1\n1 1\n0 2\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert_eq!(err.kind, ParseErrorKind::Graph(GraphError::SelfLoop { vertex: 1 }));
    }

    #[test]
    fn parse_rejects_duplicate_edge() {
        let err = parse_graph("3 3\n0 1\n1 0\n0 2\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert_eq!(
            err.kind,
            ParseErrorKind::Graph(GraphError::DuplicateEdge { u: 0, v: 1 })
        );
    }

    #[test]
    fn parse_rejects_out_of_range_index() {
        let err = parse_graph("3 2\n0 1\n1 3\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert_eq!(
            err.kind,
            ParseErrorKind::Graph(GraphError::VertexOutOfRange { index: 3, n: 3 })
        );
    }

    #[test]
    fn parse_rejects_bad_header_and_missing_edges() {
        assert_eq!(
            parse_graph("x y\n").unwrap_err().kind,
            ParseErrorKind::MalformedHeader
        );
        assert_eq!(
            parse_graph("").unwrap_err().kind,
            ParseErrorKind::MalformedHeader
        );
        let err = parse_graph("4 3\n0 1\n1 2\n").unwrap_err();
        assert_eq!(
            err.kind,
            ParseErrorKind::EdgeCountMismatch { expected: 3, found: 2 }
        );
        let err = parse_graph("2 1\n0 1\n0 1\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::TrailingContent);
        assert_eq!(
            parse_graph("0 0\n").unwrap_err().kind,
            ParseErrorKind::Graph(GraphError::ZeroVertices)
        );
    }

    #[test]
    fn serialize_is_canonical() {
        let k2 = Graph::new(2, [(1, 0)]).unwrap();
        assert_eq!(serialize_graph(&k2), "2 1\n0 1\n");
        let p3 = generate(GraphFamily::Path(3)).unwrap();
        assert_eq!(serialize_graph(&p3), "3 2\n0 1\n1 2\n");
        let c6 = generate(GraphFamily::Cycle(6)).unwrap();
        assert_eq!(serialize_graph(&c6), "6 6\n0 1\n0 5\n1 2\n2 3\n3 4\n4 5\n");
    }

    #[test]
    fn generate_family_sizes() {
        let k5 = generate(GraphFamily::Complete(5)).unwrap();
        assert_eq!(k5.edge_count(), 10);
        assert!(k5.is_complete());
        assert_eq!(generate(GraphFamily::Cycle(6)).unwrap().edge_count(), 6);
        assert_eq!(generate(GraphFamily::Path(7)).unwrap().edge_count(), 6);
        assert_eq!(generate(GraphFamily::Star(7)).unwrap().edge_count(), 6);
    }

    #[test]
    fn generate_rejects_short_cycle() {
        assert!(matches!(
            generate(GraphFamily::Cycle(2)),
            Err(Error::InvalidParameter { family: "cycle", value: 2, min: 3 })
        ));
    }

    #[test]
    fn chemical_tree_edges() {
        let t = generate(GraphFamily::ChemicalTree5).unwrap();
        assert_eq!(t.n(), 5);
        assert_eq!(t.edges(), &[(0, 1), (1, 2), (2, 3), (2, 4)]);
        assert!(is_connected(&t));
    }

    #[test]
    fn truncated_icosahedron_is_cubic() {
        let g = generate(GraphFamily::TruncatedIcosahedron).unwrap();
        assert_eq!(g.n(), 60);
        assert_eq!(g.edge_count(), 90);
        assert!(is_connected(&g));
        let adj = g.adjacency();
        assert!(adj.iter().all(|nb| nb.len() == 3));
        // Euler: n - m + f = 2 on the sphere.
        assert_eq!(2 + g.edge_count() - g.n(), 32);
    }

    #[test]
    fn connectivity_cases() {
        assert!(is_connected(&generate(GraphFamily::Complete(1)).unwrap()));
        assert!(is_connected(&generate(GraphFamily::Cycle(6)).unwrap()));
        let two_edges = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!is_connected(&two_edges));
    }

    #[test]
    fn complete_graphs_are_connected_with_all_pairs_adjacent() {
        for n in 1..=8 {
            let g = generate(GraphFamily::Complete(n)).unwrap();
            assert!(is_connected(&g));
            for u in 0..n {
                for v in u + 1..n {
                    assert!(g.has_edge(u, v));
                }
            }
        }
    }

    fn arbitrary_graph() -> impl Strategy<Value = Graph> {
        (1usize..9).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            proptest::collection::vec(proptest::bool::ANY, pairs.len()).prop_map(move |mask| {
                let edges = pairs
                    .iter()
                    .zip(&mask)
                    .filter(|(_, &keep)| keep)
                    .map(|(&e, _)| e);
                Graph::new(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn parse_serialize_round_trip(g in arbitrary_graph()) {
            let text = serialize_graph(&g);
            prop_assert_eq!(parse_graph(&text).unwrap(), g);
        }
    }
}
