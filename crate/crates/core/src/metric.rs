//! Finite metric spaces, weighted and unweighted graphs, shortest-path
//! metrics, and critical-graph construction.
//!
//! The critical graph of a metric keeps edge {u, v} exactly when no third
//! point z satisfies d(u,v) >= d(u,z) + d(z,v); it is the unique minimal
//! graph whose shortest-path metric reproduces the metric.

use crate::error::{Error, Result};

/// A finite metric space: labeled points plus a distance matrix that has
/// passed the metric axioms.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricSpace {
    labels: Vec<String>,
    /// Row-major n*n distances, symmetric with zero diagonal.
    d: Vec<f64>,
    n: usize,
}

impl MetricSpace {
    /// Validating constructor; see [`validate_metric`].
    pub fn new(labels: Vec<String>, rows: &[Vec<f64>], tol: f64) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        for row in rows {
            if row.len() != n {
                return Err(Error::NotSquare {
                    rows: n,
                    cols: row.len(),
                });
            }
        }
        if labels.len() != n {
            return Err(Error::SizeMismatch {
                left: labels.len(),
                right: n,
            });
        }
        for i in 0..n {
            let diag = rows[i][i];
            if !(diag.abs() <= tol) {
                return Err(Error::NonzeroDiagonal { i, value: diag });
            }
            for j in (i + 1)..n {
                let a = rows[i][j];
                let b = rows[j][i];
                if !((a - b).abs() <= tol) {
                    return Err(Error::AsymmetricMatrix { i, j, a, b });
                }
                if !(a > 0.0) || !a.is_finite() {
                    return Err(Error::NegativeDistance { i, j, value: a });
                }
            }
        }
        // symmetrize and zero the diagonal before the triangle check so the
        // stored matrix is exactly a metric candidate
        let mut d = vec![0.0; n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                let v = 0.5 * (rows[i][j] + rows[j][i]);
                d[i * n + j] = v;
                d[j * n + i] = v;
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if k == i || k == j {
                        continue;
                    }
                    let direct = d[i * n + j];
                    let detour = d[i * n + k] + d[k * n + j];
                    if direct > detour + tol {
                        return Err(Error::TriangleViolation {
                            i,
                            j,
                            k,
                            direct,
                            detour,
                        });
                    }
                }
            }
        }
        Ok(MetricSpace { labels, d, n })
    }

    /// Euclidean metric of a point set; points must be pairwise distinct.
    pub fn from_points(points: &[Vec<f64>]) -> Result<Self> {
        let n = points.len();
        if n == 0 {
            return Err(Error::EmptyInput);
        }
        let dim = points[0].len();
        for p in points {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: p.len(),
                });
            }
        }
        let mut rows = vec![vec![0.0; n]; n];
        let mut max_d: f64 = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                let dist = points[i]
                    .iter()
                    .zip(&points[j])
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum::<f64>()
                    .sqrt();
                rows[i][j] = dist;
                rows[j][i] = dist;
                max_d = max_d.max(dist);
            }
        }
        let labels = (0..n).map(|i| i.to_string()).collect();
        MetricSpace::new(labels, &rows, 1e-9 * max_d.max(1.0))
    }

    /// Metric of distinct real values under |a - b|; labels are indices.
    pub fn from_reals(values: &[f64]) -> Result<Self> {
        let pts: Vec<Vec<f64>> = values.iter().map(|&v| vec![v]).collect();
        MetricSpace::from_points(&pts)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dist(&self, i: usize, j: usize) -> f64 {
        self.d[i * self.n + j]
    }

    pub fn max_distance(&self) -> f64 {
        self.d.iter().fold(0.0, |acc, &x| acc.max(x))
    }

    /// Default strictness tolerance for critical-graph tests:
    /// `1e-9 * max distance`.
    pub fn default_tol(&self) -> f64 {
        1e-9 * self.max_distance()
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| self.d[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }

    /// True when the distance matrices agree entrywise within `tol`
    /// (labels are ignored).
    pub fn approx_eq(&self, other: &MetricSpace, tol: f64) -> bool {
        self.n == other.n
            && self
                .d
                .iter()
                .zip(&other.d)
                .all(|(a, b)| (a - b).abs() <= tol)
    }
}

/// Validates the metric axioms on a raw matrix.
///
/// Symmetry, zero diagonal, and the triangle inequality are checked within
/// `tol`; off-diagonal entries must be strictly positive.
pub fn validate_metric(rows: &[Vec<f64>], tol: f64) -> Result<MetricSpace> {
    let labels = (0..rows.len()).map(|i| i.to_string()).collect();
    MetricSpace::new(labels, rows, tol)
}

/// Undirected edge with a strictly positive weight.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub w: f64,
}

/// Undirected weighted graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph {
    n: usize,
    /// Normalized to u < v and sorted, so equal graphs compare equal.
    edges: Vec<Edge>,
}

impl WeightedGraph {
    pub fn new(n: usize, edges: &[(usize, usize, f64)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut norm: Vec<Edge> = Vec::with_capacity(edges.len());
        for &(u, v, w) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            if !(w > 0.0) || !w.is_finite() {
                return Err(Error::NonpositiveWeight { u, v, weight: w });
            }
            let (u, v) = if u < v { (u, v) } else { (v, u) };
            norm.push(Edge { u, v, w });
        }
        norm.sort_by_key(|e| (e.u, e.v));
        for pair in norm.windows(2) {
            if pair[0].u == pair[1].u && pair[0].v == pair[1].v {
                return Err(Error::DuplicateEdge {
                    u: pair[0].u,
                    v: pair[0].v,
                });
            }
        }
        Ok(WeightedGraph { n, edges: norm })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        self.edges.iter().any(|e| e.u == u && e.v == v)
    }

    /// Graph with one edge dropped, for minimality checks.
    pub fn without_edge(&self, idx: usize) -> WeightedGraph {
        let mut edges = self.edges.clone();
        edges.remove(idx);
        WeightedGraph { n: self.n, edges }
    }
}

/// All-pairs shortest-path metric of a connected weighted graph.
///
/// Cubic dynamic programming over all intermediates; n is small by design.
pub fn shortest_path_metric(g: &WeightedGraph) -> Result<MetricSpace> {
    let n = g.n();
    let mut d = vec![f64::INFINITY; n * n];
    for i in 0..n {
        d[i * n + i] = 0.0;
    }
    for e in g.edges() {
        let w = d[e.u * n + e.v].min(e.w);
        d[e.u * n + e.v] = w;
        d[e.v * n + e.u] = w;
    }
    for k in 0..n {
        for i in 0..n {
            let dik = d[i * n + k];
            if dik.is_infinite() {
                continue;
            }
            for j in 0..n {
                let detour = dik + d[k * n + j];
                if detour < d[i * n + j] {
                    d[i * n + j] = detour;
                    d[j * n + i] = detour;
                }
            }
        }
    }
    if let Some(stranded) = (0..n).find(|&v| d[v].is_infinite()) {
        return Err(Error::DisconnectedGraph { vertex: stranded });
    }
    let rows: Vec<Vec<f64>> = (0..n).map(|i| d[i * n..(i + 1) * n].to_vec()).collect();
    let max_d = d.iter().fold(0.0f64, |acc, &x| acc.max(x));
    let labels = (0..n).map(|i| i.to_string()).collect();
    MetricSpace::new(labels, &rows, 1e-9 * max_d.max(1.0))
}

/// The metric's critical graph together with the point labels it inherited.
#[derive(Debug, Clone, PartialEq)]
pub struct CriticalGraph {
    pub graph: WeightedGraph,
    pub labels: Vec<String>,
}

impl CriticalGraph {
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn edges(&self) -> &[Edge] {
        self.graph.edges()
    }

    /// Unweighted view of the edge structure.
    pub fn structure(&self) -> SimpleGraph {
        let pairs: Vec<(usize, usize)> = self.graph.edges().iter().map(|e| (e.u, e.v)).collect();
        SimpleGraph::from_edges(self.graph.n(), &pairs).expect("edges already validated")
    }
}

/// Critical graph of a metric: edge {u, v} survives only if
/// `d(u,v) < d(u,z) + d(z,v) - tol` for every other point z.
///
/// Ties within `tol` deterministically delete the edge, matching the strict
/// inequality in the definition.
pub fn critical_graph(m: &MetricSpace, tol: f64) -> CriticalGraph {
    let n = m.n();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            let duv = m.dist(u, v);
            let blocked = (0..n)
                .filter(|&z| z != u && z != v)
                .any(|z| duv >= m.dist(u, z) + m.dist(z, v) - tol);
            if !blocked {
                edges.push((u, v, duv));
            }
        }
    }
    let graph = WeightedGraph::new(n, &edges).expect("critical edges are valid by construction");
    CriticalGraph {
        graph,
        labels: m.labels().to_vec(),
    }
}

/// True iff the graph's shortest-path metric reproduces `m` entrywise
/// within `tol`. A disconnected graph generates no finite metric.
pub fn generates_metric(g: &WeightedGraph, m: &MetricSpace, tol: f64) -> Result<bool> {
    if g.n() != m.n() {
        return Err(Error::SizeMismatch {
            left: g.n(),
            right: m.n(),
        });
    }
    match shortest_path_metric(g) {
        Ok(sp) => Ok(sp.approx_eq(m, tol)),
        Err(Error::DisconnectedGraph { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Unweighted simple graph on up to 64 vertices, adjacency stored as one
/// bitmask row per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u64>,
}

impl SimpleGraph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 || n > 64 {
            return Err(Error::BadParameters {
                reason: format!("graph order {n} outside 1..=64"),
            });
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            if adj[u] >> v & 1 == 1 {
                let (u, v) = if u < v { (u, v) } else { (v, u) };
                return Err(Error::DuplicateEdge { u, v });
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(SimpleGraph { n, adj })
    }

    /// Decodes an adjacency bitmask over the pairs (i, j), i < j, where the
    /// pair bit index is `j*(j-1)/2 + i`. Enumerating `0..2^(n(n-1)/2)`
    /// masks visits every labeled graph on n vertices exactly once.
    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        if n == 0 || n > 11 {
            return Err(Error::BadParameters {
                reason: format!("mask graphs supported for 1..=11 vertices, got {n}"),
            });
        }
        let mut adj = vec![0u64; n];
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> bit & 1 == 1 {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
                bit += 1;
            }
        }
        Ok(SimpleGraph { n, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Bitmask selecting every vertex.
    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Sum of vertex degrees.
    pub fn volume(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum()
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.full_mask())
    }

    /// Connectivity of the subgraph induced by the vertex set `within`.
    pub fn is_connected_within(&self, within: u64) -> bool {
        if within == 0 {
            return true;
        }
        let start = within.trailing_zeros() as usize;
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v] & within;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen & within == within
    }

    /// Hop distances from `src`; unreachable vertices get `usize::MAX`.
    pub fn bfs_distances(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[src] = 0;
        let mut frontier = 1u64 << src;
        let mut seen = frontier;
        let mut level = 0usize;
        while frontier != 0 {
            level += 1;
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            next &= !seen;
            seen |= next;
            let mut nf = next;
            while nf != 0 {
                let v = nf.trailing_zeros() as usize;
                nf &= nf - 1;
                dist[v] = level;
            }
            frontier = next;
        }
        dist
    }

    /// Shortest-path metric of a connected unweighted graph.
    pub fn metric(&self) -> Result<MetricSpace> {
        let n = self.n;
        let mut rows = vec![vec![0.0; n]; n];
        for u in 0..n {
            let dist = self.bfs_distances(u);
            for v in 0..n {
                if dist[v] == usize::MAX {
                    return Err(Error::DisconnectedGraph { vertex: v });
                }
                rows[u][v] = dist[v] as f64;
            }
        }
        if n == 1 {
            return MetricSpace::new(vec!["0".into()], &rows, 0.0);
        }
        let labels = (0..n).map(|i| i.to_string()).collect();
        MetricSpace::new(labels, &rows, 1e-9 * (n as f64))
    }

    /// Unit-weight view as a [`WeightedGraph`].
    pub fn to_weighted(&self) -> WeightedGraph {
        let edges: Vec<(usize, usize, f64)> =
            self.edges().iter().map(|&(u, v)| (u, v, 1.0)).collect();
        WeightedGraph::new(self.n, &edges).expect("simple graph edges are valid")
    }
}

/// Strict unit-weight conversion, used where only unweighted graphs make
/// sense (normalized Laplacian, theorem checks).
pub fn require_unit_weights(g: &WeightedGraph) -> Result<SimpleGraph> {
    for e in g.edges() {
        if e.w != 1.0 {
            return Err(Error::UnitWeightRequired {
                u: e.u,
                v: e.v,
                weight: e.w,
            });
        }
    }
    let pairs: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
    SimpleGraph::from_edges(g.n(), &pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    fn path_graph(n: usize) -> WeightedGraph {
        let edges: Vec<(usize, usize, f64)> = (0..n - 1).map(|i| (i, i + 1, 1.0)).collect();
        WeightedGraph::new(n, &edges).unwrap()
    }

    #[test]
    fn validate_two_point_space() {
        let m = validate_metric(&[vec![0.0, 1.0], vec![1.0, 0.0]], 1e-9).unwrap();
        assert_eq!(m.n(), 2);
        assert_eq!(m.dist(0, 1), 1.0);
    }

    #[test]
    fn validate_reports_triangle_violation() {
        let err = validate_metric(
            &[
                vec![0.0, 1.0, 3.0],
                vec![1.0, 0.0, 1.0],
                vec![3.0, 1.0, 0.0],
            ],
            1e-9,
        )
        .unwrap_err();
        match err {
            Error::TriangleViolation { i, j, k, .. } => {
                assert_eq!((i.min(j), i.max(j), k), (0, 2, 1));
            }
            other => panic!("expected TriangleViolation, got {other}"),
        }
    }

    #[test]
    fn validate_allows_tight_triangles() {
        let m = validate_metric(
            &[
                vec![0.0, 1.0, 2.0],
                vec![1.0, 0.0, 1.0],
                vec![2.0, 1.0, 0.0],
            ],
            1e-9,
        )
        .unwrap();
        assert_eq!(m.dist(0, 2), 2.0);
    }

    #[test]
    fn validate_rejects_bad_matrices() {
        assert!(matches!(
            validate_metric(&[vec![0.0, 1.0], vec![2.0, 0.0]], 1e-9),
            Err(Error::AsymmetricMatrix { .. })
        ));
        assert!(matches!(
            validate_metric(&[vec![0.0, -1.0], vec![-1.0, 0.0]], 1e-9),
            Err(Error::NegativeDistance { .. })
        ));
        assert!(matches!(
            validate_metric(&[vec![0.0, 0.0], vec![0.0, 0.0]], 1e-9),
            Err(Error::NegativeDistance { .. })
        ));
        assert!(matches!(
            validate_metric(&[vec![1.0]], 1e-9),
            Err(Error::NonzeroDiagonal { .. })
        ));
        assert!(matches!(
            validate_metric(&[vec![0.0, 1.0]], 1e-9),
            Err(Error::NotSquare { .. })
        ));
        assert!(matches!(validate_metric(&[], 1e-9), Err(Error::EmptyMatrix)));
        assert!(validate_metric(&[vec![0.0]], 1e-9).is_ok());
    }

    #[test]
    fn shortest_paths_on_p3() {
        let m = shortest_path_metric(&path_graph(3)).unwrap();
        let want = [[0.0, 1.0, 2.0], [1.0, 0.0, 1.0], [2.0, 1.0, 0.0]];
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(m.dist(i, j), want[i][j]);
            }
        }
    }

    #[test]
    fn shortest_paths_prefer_detour() {
        let g = WeightedGraph::new(3, &[(0, 1, 1.0), (1, 2, 1.0), (0, 2, 3.0)]).unwrap();
        let m = shortest_path_metric(&g).unwrap();
        assert_eq!(m.dist(0, 2), 2.0);
    }

    #[test]
    fn shortest_paths_c4_antipodal() {
        let g = WeightedGraph::new(4, &[(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 0, 1.0)])
            .unwrap();
        let m = shortest_path_metric(&g).unwrap();
        assert_eq!(m.dist(0, 2), 2.0);
        assert_eq!(m.dist(1, 3), 2.0);
    }

    #[test]
    fn shortest_paths_names_stranded_vertex() {
        let g = WeightedGraph::new(3, &[(0, 1, 1.0)]).unwrap();
        assert_eq!(
            shortest_path_metric(&g).unwrap_err(),
            Error::DisconnectedGraph { vertex: 2 }
        );
    }

    #[test]
    fn graph_constructor_rejects_bad_edges() {
        assert!(matches!(
            WeightedGraph::new(2, &[(0, 0, 1.0)]),
            Err(Error::SelfLoop { .. })
        ));
        assert!(matches!(
            WeightedGraph::new(2, &[(0, 1, 1.0), (1, 0, 2.0)]),
            Err(Error::DuplicateEdge { .. })
        ));
        assert!(matches!(
            WeightedGraph::new(2, &[(0, 1, 0.0)]),
            Err(Error::NonpositiveWeight { .. })
        ));
        assert!(matches!(
            WeightedGraph::new(2, &[(0, 3, 1.0)]),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn critical_graph_of_p3_metric() {
        let m = shortest_path_metric(&path_graph(3)).unwrap();
        let cg = critical_graph(&m, m.default_tol());
        assert_eq!(cg.edges().len(), 2);
        assert!(cg.graph.has_edge(0, 1));
        assert!(cg.graph.has_edge(1, 2));
        assert!(!cg.graph.has_edge(0, 2));
    }

    #[test]
    fn critical_graph_of_unit_metric_is_complete() {
        let m = validate_metric(
            &[
                vec![0.0, 1.0, 1.0],
                vec![1.0, 0.0, 1.0],
                vec![1.0, 1.0, 0.0],
            ],
            1e-9,
        )
        .unwrap();
        let cg = critical_graph(&m, m.default_tol());
        assert_eq!(cg.edges().len(), 3);
    }

    #[test]
    fn critical_graph_of_collinear_points_is_path() {
        let pts: Vec<Vec<f64>> = [0.0, 1.0, 2.0, 3.0].iter().map(|&x| vec![x]).collect();
        let m = MetricSpace::from_points(&pts).unwrap();
        let cg = critical_graph(&m, m.default_tol());

        // independent edge test straight from the definition
        let mut expect = Vec::new();
        for u in 0..4 {
            for v in (u + 1)..4 {
                let strict = (0..4)
                    .filter(|&z| z != u && z != v)
                    .all(|z| m.dist(u, v) < m.dist(u, z) + m.dist(z, v) - 1e-12);
                if strict {
                    expect.push((u, v));
                }
            }
        }
        assert_eq!(expect, vec![(0, 1), (1, 2), (2, 3)]);
        let got: Vec<(usize, usize)> = cg.edges().iter().map(|e| (e.u, e.v)).collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn generates_metric_contract() {
        let m = shortest_path_metric(&path_graph(3)).unwrap();
        let cg = critical_graph(&m, m.default_tol());
        assert!(generates_metric(&cg.graph, &m, 1e-9).unwrap());
        // dropping any edge of the critical graph breaks generation
        for idx in 0..cg.graph.edge_count() {
            assert!(!generates_metric(&cg.graph.without_edge(idx), &m, 1e-9).unwrap());
        }
        // the complete graph weighted by d always generates
        let n = m.n();
        let mut complete = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                complete.push((u, v, m.dist(u, v)));
            }
        }
        let kg = WeightedGraph::new(n, &complete).unwrap();
        assert!(generates_metric(&kg, &m, 1e-9).unwrap());

        let smaller = shortest_path_metric(&path_graph(2)).unwrap();
        assert!(matches!(
            generates_metric(&kg, &smaller, 1e-9),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn critical_graph_idempotent() {
        let mut rng = SplitMix64::new(20);
        for _ in 0..50 {
            let n = 2 + rng.next_below(7) as usize;
            let pts: Vec<Vec<f64>> = (0..n)
                .map(|_| (0..3).map(|_| rng.next_normal()).collect())
                .collect();
            let m = MetricSpace::from_points(&pts).unwrap();
            let tol = m.default_tol();
            let cg = critical_graph(&m, tol);
            let regenerated = shortest_path_metric(&cg.graph).unwrap();
            let cg2 = critical_graph(&regenerated, regenerated.default_tol());
            assert_eq!(cg.graph.edges(), cg2.graph.edges());
            assert!(generates_metric(&cg.graph, &m, 1e-6 * m.max_distance()).unwrap());
        }
    }

    #[test]
    fn minimality_on_random_euclidean() {
        let mut rng = SplitMix64::new(77);
        for _ in 0..30 {
            let n = 3 + rng.next_below(6) as usize;
            let pts: Vec<Vec<f64>> = (0..n)
                .map(|_| (0..2).map(|_| rng.next_normal()).collect())
                .collect();
            let m = MetricSpace::from_points(&pts).unwrap();
            let cg = critical_graph(&m, m.default_tol());
            for idx in 0..cg.graph.edge_count() {
                let pruned = cg.graph.without_edge(idx);
                assert!(
                    !generates_metric(&pruned, &m, 1e-9 * m.max_distance().max(1.0)).unwrap(),
                    "critical graph edge {idx} was removable"
                );
            }
        }
    }

    #[test]
    fn unweighted_critical_graph_is_identity() {
        let mut rng = SplitMix64::new(5);
        let mut tried = 0;
        while tried < 40 {
            let n = 2 + rng.next_below(5) as usize;
            let bits = n * (n - 1) / 2;
            let mask = rng.next_u64() & ((1u64 << bits) - 1);
            let g = SimpleGraph::from_mask(n, mask).unwrap();
            if !g.is_connected() {
                continue;
            }
            tried += 1;
            let m = g.metric().unwrap();
            let cg = critical_graph(&m, m.default_tol());
            let got: Vec<(usize, usize)> = cg.edges().iter().map(|e| (e.u, e.v)).collect();
            assert_eq!(got, g.edges());
        }
    }

    #[test]
    fn simple_graph_helpers() {
        let g = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(g.is_connected());
        assert_eq!(g.bfs_distances(0), vec![0, 1, 2, 3]);
        assert_eq!(g.volume(), 6);
        let m = g.metric().unwrap();
        assert_eq!(m.dist(0, 3), 3.0);

        let h = SimpleGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!h.is_connected());
        assert!(matches!(
            h.metric(),
            Err(Error::DisconnectedGraph { .. })
        ));
    }

    #[test]
    fn mask_roundtrip_counts_edges() {
        // mask with all bits set on 4 vertices -> K4
        let g = SimpleGraph::from_mask(4, (1 << 6) - 1).unwrap();
        assert_eq!(g.edge_count(), 6);
        let empty = SimpleGraph::from_mask(4, 0).unwrap();
        assert_eq!(empty.edge_count(), 0);
    }

    #[test]
    fn unit_weight_conversion() {
        let g = WeightedGraph::new(3, &[(0, 1, 1.0), (1, 2, 1.0)]).unwrap();
        assert!(require_unit_weights(&g).is_ok());
        let h = WeightedGraph::new(3, &[(0, 1, 2.0), (1, 2, 1.0)]).unwrap();
        assert!(matches!(
            require_unit_weights(&h),
            Err(Error::UnitWeightRequired { .. })
        ));
    }
}
