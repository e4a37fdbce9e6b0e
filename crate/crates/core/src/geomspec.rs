//! Normalized Laplacian, classic and geometric Fiedler values, and the
//! orthogonality functional for maps from a graph's vertices into a
//! metric space.
//!
//! The geometric Fiedler value of a connected unweighted graph G over a
//! metric space X is the minimum over non-constant maps f: V -> X of
//!
//! ```text
//! vol(G) * sum_{u~v} d(f(u), f(v))^2
//! ----------------------------------------------
//! sum_{unordered pairs} d(f(u), f(v))^2 d_u d_v
//! ```
//!
//! With X the reals this reproduces the second eigenvalue of the
//! normalized Laplacian; with X two points at distance one it solves
//! sparsest cut with unit demands.

use crate::error::{Error, Result};
use crate::metric::{MetricSpace, SimpleGraph};
use crate::symmat::{jacobi_eigen, SymmetricMatrix};

const DEFAULT_SEARCH_BUDGET: u64 = 10_000_000;

/// A total assignment of graph vertices to points of a target metric space.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicMap {
    pub graph: SimpleGraph,
    pub target: MetricSpace,
    /// `assignment[v]` indexes a point of `target`.
    pub assignment: Vec<usize>,
}

impl HarmonicMap {
    pub fn new(graph: SimpleGraph, target: MetricSpace, assignment: Vec<usize>) -> Result<Self> {
        if assignment.len() != graph.n() {
            return Err(Error::SizeMismatch {
                left: assignment.len(),
                right: graph.n(),
            });
        }
        if let Some(&bad) = assignment.iter().find(|&&p| p >= target.n()) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                len: target.n(),
            });
        }
        Ok(HarmonicMap {
            graph,
            target,
            assignment,
        })
    }

    pub fn is_constant(&self) -> bool {
        self.assignment.windows(2).all(|w| w[0] == w[1])
    }
}

/// Result of the exhaustive geometric Fiedler search.
#[derive(Debug, Clone)]
pub struct GeometricFiedlerResult {
    pub value: f64,
    pub argmin: HarmonicMap,
    pub maps_searched: u64,
}

/// `L = I - T^{-1/2} A T^{-1/2}` of an unweighted graph.
pub fn normalized_laplacian(g: &SimpleGraph) -> Result<SymmetricMatrix> {
    let n = g.n();
    if let Some(v) = (0..n).find(|&v| g.degree(v) == 0) {
        return Err(Error::IsolatedVertex { vertex: v });
    }
    SymmetricMatrix::from_fn(n, |i, j| {
        if i == j {
            1.0
        } else if g.has_edge(i, j) {
            -1.0 / ((g.degree(i) * g.degree(j)) as f64).sqrt()
        } else {
            0.0
        }
    })
}

/// Second-smallest eigenvalue of the normalized Laplacian.
pub fn classic_lambda2(g: &SimpleGraph) -> Result<f64> {
    let dist = g.bfs_distances(0);
    if let Some(v) = dist.iter().position(|&d| d == usize::MAX) {
        return Err(Error::DisconnectedGraph { vertex: v });
    }
    let lap = normalized_laplacian(g)?;
    let eig = jacobi_eigen(&lap).expect("laplacian entries are finite");
    Ok(eig.eigenvalues[1])
}

fn quotient(g: &SimpleGraph, x: &MetricSpace, assignment: &[usize]) -> f64 {
    let n = g.n();
    let vol = g.volume() as f64;
    let mut cut = 0.0;
    for (u, v) in g.edges() {
        let d = x.dist(assignment[u], assignment[v]);
        cut += d * d;
    }
    let mut den = 0.0;
    for u in 0..n {
        for v in (u + 1)..n {
            let d = x.dist(assignment[u], assignment[v]);
            den += d * d * (g.degree(u) * g.degree(v)) as f64;
        }
    }
    vol * cut / den
}

/// Rayleigh-style quotient of a single map.
///
/// The denominator runs over unordered vertex pairs; over the reals this
/// reproduces the classical quotient `<x, Lx> / <x, x>` with
/// `x = T^{1/2}(f - mean)`.
pub fn geometric_rayleigh(h: &HarmonicMap) -> Result<f64> {
    if h.is_constant() {
        return Err(Error::ConstantMap);
    }
    Ok(quotient(&h.graph, &h.target, &h.assignment))
}

/// Exact geometric Fiedler value by exhaustive search over all
/// non-constant assignments, lexicographic order, first minimizer kept.
pub fn geometric_fiedler(g: &SimpleGraph, x: &MetricSpace) -> Result<GeometricFiedlerResult> {
    geometric_fiedler_with_budget(g, x, DEFAULT_SEARCH_BUDGET)
}

/// Same with an explicit bound on `|X|^|V|`.
pub fn geometric_fiedler_with_budget(
    g: &SimpleGraph,
    x: &MetricSpace,
    budget: u64,
) -> Result<GeometricFiedlerResult> {
    let k = x.n();
    if k < 2 {
        return Err(Error::TargetTooSmall);
    }
    let n = g.n();
    let required = (k as u128).pow(n as u32);
    if required > budget as u128 {
        return Err(Error::BudgetExceeded { required, budget });
    }
    let total = required as u64;
    let mut assignment = vec![0usize; n];
    let mut best: Option<(f64, Vec<usize>)> = None;
    let mut searched = 0u64;
    for code in 0..total {
        let mut c = code;
        // vertex 0 is the most significant digit, so codes ascend in
        // lexicographic assignment order
        for v in (0..n).rev() {
            assignment[v] = (c % k as u64) as usize;
            c /= k as u64;
        }
        if assignment.windows(2).all(|w| w[0] == w[1]) {
            continue;
        }
        searched += 1;
        let q = quotient(g, x, &assignment);
        let improves = match &best {
            None => true,
            Some((cur, _)) => q < *cur,
        };
        if improves {
            best = Some((q, assignment.clone()));
        }
    }
    let (value, argmin) = best.expect("k >= 2 guarantees a non-constant map");
    Ok(GeometricFiedlerResult {
        value,
        argmin: HarmonicMap::new(g.clone(), x.clone(), argmin)?,
        maps_searched: searched,
    })
}

/// Sparsest cut with unit demands by direct enumeration of all proper
/// vertex subsets: `min_S vol(G) |boundary(S)| / (vol(S) vol(S̄))`.
///
/// Kept independent of the geometric machinery so the two can check each
/// other.
pub fn sparsest_cut_oracle(g: &SimpleGraph) -> Result<f64> {
    let n = g.n();
    let dist = g.bfs_distances(0);
    if let Some(v) = dist.iter().position(|&d| d == usize::MAX) {
        return Err(Error::DisconnectedGraph { vertex: v });
    }
    if n < 2 {
        return Err(Error::BadParameters {
            reason: "sparsest cut needs at least two vertices".into(),
        });
    }
    if n > 25 {
        return Err(Error::BudgetExceeded {
            required: 1u128 << n,
            budget: 1 << 25,
        });
    }
    let vol: f64 = g.volume() as f64;
    let degs: Vec<f64> = (0..n).map(|v| g.degree(v) as f64).collect();
    let edges = g.edges();
    let mut best = f64::INFINITY;
    for s in 1..((1u64 << n) - 1) {
        let boundary = edges
            .iter()
            .filter(|&&(u, v)| (s >> u & 1) != (s >> v & 1))
            .count() as f64;
        let vol_s: f64 = (0..n).filter(|&v| s >> v & 1 == 1).map(|v| degs[v]).sum();
        let value = vol * boundary / (vol_s * (vol - vol_s));
        if value < best {
            best = value;
        }
    }
    Ok(best)
}

/// Orthogonality defect of two maps into the same target:
///
/// ```text
/// sum_{u,v} d_u d_v / (2 vol) * d(f1(v), f2(u))^2
///   - sum_v d_v / 2 * d(f1(v), f2(v))^2
/// ```
///
/// The double sum runs over ordered pairs including `u = v`. The defect
/// vanishes exactly when the maps are orthogonal as harmonic
/// eigenfunctions; over the reals it reduces to the degree-weighted inner
/// product of centered maps.
pub fn orthogonality_defect(f1: &HarmonicMap, f2: &HarmonicMap) -> Result<f64> {
    if f1.graph != f2.graph {
        return Err(Error::GraphMismatch);
    }
    if f1.target.n() != f2.target.n() || !f1.target.approx_eq(&f2.target, 0.0) {
        return Err(Error::TargetMismatch);
    }
    let g = &f1.graph;
    let x = &f1.target;
    let n = g.n();
    let vol = g.volume() as f64;
    let degs: Vec<f64> = (0..n).map(|v| g.degree(v) as f64).collect();

    let mut double_sum = 0.0;
    for u in 0..n {
        for v in 0..n {
            let d = x.dist(f1.assignment[v], f2.assignment[u]);
            double_sum += degs[u] * degs[v] * d * d;
        }
    }
    let mut diag_sum = 0.0;
    for v in 0..n {
        let d = x.dist(f1.assignment[v], f2.assignment[v]);
        diag_sum += degs[v] * d * d;
    }
    Ok(double_sum / (2.0 * vol) - 0.5 * diag_sum)
}

/// Builds a metric space from real values (deduplicated, sorted) together
/// with the index assignment mapping each input value to its point.
pub fn real_target(values: &[f64]) -> Result<(MetricSpace, Vec<usize>)> {
    if values.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut unique: Vec<f64> = values.to_vec();
    unique.sort_by(f64::total_cmp);
    unique.dedup();
    let assignment: Vec<usize> = values
        .iter()
        .map(|v| unique.partition_point(|u| u < v))
        .collect();
    let space = MetricSpace::from_reals(&unique)?;
    Ok((space, assignment))
}
