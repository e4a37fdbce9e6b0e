//! Structural classifiers for critical graphs and exhaustive verification
//! that an unweighted graph metric embeds iff the graph is a path or a
//! complete graph.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::metric::{critical_graph, MetricSpace, SimpleGraph};
use crate::schoenberg::is_embeddable;

/// Shape tag with a re-checkable certificate where one exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructureClass {
    Path { order: Vec<usize> },
    Complete,
    Cycle { order: Vec<usize> },
    FourPointPath { order: Vec<usize> },
    K4,
    K4MinusE { missing: (usize, usize) },
    Claw { center: usize },
    ClawPlusEdge { center: usize, extra: (usize, usize) },
    C4 { order: Vec<usize> },
    Other,
}

impl StructureClass {
    pub fn tag(&self) -> &'static str {
        match self {
            StructureClass::Path { .. } => "Path",
            StructureClass::Complete => "Complete",
            StructureClass::Cycle { .. } => "Cycle",
            StructureClass::FourPointPath { .. } => "FourPointPath",
            StructureClass::K4 => "K4",
            StructureClass::K4MinusE { .. } => "K4MinusE",
            StructureClass::Claw { .. } => "Claw",
            StructureClass::ClawPlusEdge { .. } => "ClawPlusEdge",
            StructureClass::C4 { .. } => "C4",
            StructureClass::Other => "Other",
        }
    }
}

/// Path / 2-connectivity facts plus every 2-cut with its adjacency flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectivityReport {
    pub is_path: bool,
    pub is_2_connected: bool,
    pub is_3_connected: bool,
    pub two_cuts: Vec<TwoCut>,
}

/// A vertex pair whose removal disconnects the graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoCut {
    pub u: usize,
    pub v: usize,
    pub adjacent: bool,
}

/// Hamiltonian ordering with a pivot position `k` (1-based, `2 <= k <=
/// n-1`) such that `order[i-1] ~ order[j-1]` iff `|i-j| = 1` or `i < k < j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PivotDecomposition {
    pub order: Vec<usize>,
    pub k: usize,
}

fn first_unreachable(g: &SimpleGraph) -> Option<usize> {
    let dist = g.bfs_distances(0);
    dist.iter().position(|&d| d == usize::MAX)
}

/// Vertex order of the induced subgraph on `within` when it is a path.
fn induced_path_order(g: &SimpleGraph, within: u64) -> Option<Vec<usize>> {
    let verts: Vec<usize> = (0..g.n()).filter(|&v| within >> v & 1 == 1).collect();
    if verts.is_empty() {
        return None;
    }
    if verts.len() == 1 {
        return Some(verts);
    }
    let deg = |v: usize| (g.neighbors_mask(v) & within).count_ones() as usize;
    let mut endpoints: Vec<usize> = Vec::new();
    for &v in &verts {
        match deg(v) {
            1 => endpoints.push(v),
            2 => {}
            _ => return None,
        }
    }
    if endpoints.len() != 2 || !g.is_connected_within(within) {
        return None;
    }
    // walk from the smaller endpoint
    let start = *endpoints.iter().min().unwrap();
    let mut order = vec![start];
    let mut seen = 1u64 << start;
    let mut cur = start;
    while order.len() < verts.len() {
        let next_mask = g.neighbors_mask(cur) & within & !seen;
        if next_mask == 0 {
            return None;
        }
        let next = next_mask.trailing_zeros() as usize;
        order.push(next);
        seen |= 1 << next;
        cur = next;
    }
    Some(order)
}

fn cycle_order(g: &SimpleGraph) -> Option<Vec<usize>> {
    let n = g.n();
    if n < 3 || g.edge_count() != n {
        return None;
    }
    if (0..n).any(|v| g.degree(v) != 2) {
        return None;
    }
    if !g.is_connected() {
        return None;
    }
    let mut order = vec![0usize];
    let mut seen = 1u64;
    let mut cur = 0usize;
    while order.len() < n {
        let next_mask = g.neighbors_mask(cur) & !seen;
        if next_mask == 0 {
            return None;
        }
        let next = next_mask.trailing_zeros() as usize;
        order.push(next);
        seen |= 1 << next;
        cur = next;
    }
    Some(order)
}

/// Classifies a connected unweighted graph as Path, Complete, Cycle, or
/// Other.
///
/// Graphs that are both (K1, K2, K3) report Complete.
pub fn classify_unweighted(g: &SimpleGraph) -> Result<StructureClass> {
    if let Some(v) = first_unreachable(g) {
        return Err(Error::DisconnectedGraph { vertex: v });
    }
    let n = g.n();
    if (0..n).all(|v| g.degree(v) == n - 1) {
        return Ok(StructureClass::Complete);
    }
    let full = g.full_mask();
    if let Some(order) = induced_path_order(g, full) {
        return Ok(StructureClass::Path { order });
    }
    if let Some(order) = cycle_order(g) {
        return Ok(StructureClass::Cycle { order });
    }
    Ok(StructureClass::Other)
}

/// Classifies a 4-point metric by the shape of its critical graph.
///
/// The tag is fully determined by edge count and degree sequence, since
/// each of the six connected 4-vertex graphs is unique up to relabeling.
pub fn classify_4point(m: &MetricSpace) -> Result<StructureClass> {
    if m.n() != 4 {
        return Err(Error::WrongSize {
            expected: 4,
            got: m.n(),
        });
    }
    let g = critical_graph(m, m.default_tol()).structure();
    let mut degs: Vec<usize> = (0..4).map(|v| g.degree(v)).collect();
    degs.sort_unstable();
    let class = match (g.edge_count(), degs.as_slice()) {
        (6, _) => StructureClass::K4,
        (5, _) => {
            let missing = (0..4)
                .flat_map(|u| ((u + 1)..4).map(move |v| (u, v)))
                .find(|&(u, v)| !g.has_edge(u, v))
                .expect("five of six edges present");
            StructureClass::K4MinusE { missing }
        }
        (4, [2, 2, 2, 2]) => {
            let order = cycle_order(&g).expect("quartic degree-2 graph is C4");
            StructureClass::C4 { order }
        }
        (4, [1, 2, 2, 3]) => {
            let center = (0..4).find(|&v| g.degree(v) == 3).unwrap();
            let extra = (0..4)
                .flat_map(|u| ((u + 1)..4).map(move |v| (u, v)))
                .find(|&(u, v)| g.has_edge(u, v) && u != center && v != center)
                .expect("leaf-leaf edge exists");
            StructureClass::ClawPlusEdge { center, extra }
        }
        (3, [1, 1, 1, 3]) => {
            let center = (0..4).find(|&v| g.degree(v) == 3).unwrap();
            StructureClass::Claw { center }
        }
        (3, [1, 1, 2, 2]) => {
            let order = induced_path_order(&g, 0b1111).expect("degree profile is a path");
            StructureClass::FourPointPath { order }
        }
        _ => StructureClass::Other,
    };
    Ok(class)
}

/// Path test, articulation-based 2-connectivity, and exhaustive 2-cut
/// search with adjacency flags.
pub fn connectivity_report(g: &SimpleGraph) -> Result<ConnectivityReport> {
    if let Some(v) = first_unreachable(g) {
        return Err(Error::DisconnectedGraph { vertex: v });
    }
    let n = g.n();
    let full = g.full_mask();
    let is_path = induced_path_order(g, full).is_some();

    let has_articulation = (0..n).any(|v| !g.is_connected_within(full & !(1u64 << v)));
    let is_2_connected = n >= 3 && !has_articulation;

    let mut two_cuts = Vec::new();
    if n >= 4 {
        for u in 0..n {
            for v in (u + 1)..n {
                let rest = full & !(1u64 << u) & !(1u64 << v);
                if !g.is_connected_within(rest) {
                    two_cuts.push(TwoCut {
                        u,
                        v,
                        adjacent: g.has_edge(u, v),
                    });
                }
            }
        }
    }
    let is_3_connected = is_2_connected && n >= 4 && two_cuts.is_empty();
    Ok(ConnectivityReport {
        is_path,
        is_2_connected,
        is_3_connected,
        two_cuts,
    })
}

fn certificate_holds(g: &SimpleGraph, order: &[usize], k: usize) -> bool {
    let n = order.len();
    for i in 1..=n {
        for j in (i + 1)..=n {
            let want = j - i == 1 || (i < k && k < j);
            if g.has_edge(order[i - 1], order[j - 1]) != want {
                return false;
            }
        }
    }
    true
}

/// Connected components of the complement of the subgraph induced by
/// `within`, as vertex masks sorted by lowest member.
fn complement_components(g: &SimpleGraph, within: u64) -> Vec<u64> {
    let mut comps = Vec::new();
    let mut left = within;
    while left != 0 {
        let start = left.trailing_zeros() as usize;
        let mut comp = 1u64 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                // complement neighbors inside `within`
                next |= within & !g.neighbors_mask(v) & !(1u64 << v);
            }
            frontier = next & !comp;
            comp |= next;
        }
        comps.push(comp);
        left &= !comp;
    }
    comps
}

/// Searches for a Hamiltonian pivot decomposition.
///
/// Pivot candidates are the degree-2 vertices. Removing a pivot must leave
/// two sides, each an induced path, completely joined to each other, with
/// the pivot attached to one endpoint of each. Sides are recovered as
/// unions of complement components, which cannot straddle a complete join.
/// The returned order puts the smaller side first; the certificate is
/// re-verified before returning.
pub fn match_pivot_structure(g: &SimpleGraph) -> Option<PivotDecomposition> {
    let n = g.n();
    if n < 4 || !g.is_connected() {
        return None;
    }
    let full = g.full_mask();
    for pivot in 0..n {
        if g.degree(pivot) != 2 {
            continue;
        }
        let rest = full & !(1u64 << pivot);
        let comps = complement_components(g, rest);
        if comps.len() < 2 {
            continue;
        }
        // all 2-partitions of the components, component 0 pinned to side A
        for sub in 0..(1u64 << (comps.len() - 1)) {
            let select = sub << 1 | 1;
            let mut side_a = 0u64;
            for (idx, comp) in comps.iter().enumerate() {
                if select >> idx & 1 == 1 {
                    side_a |= comp;
                }
            }
            let side_b = rest & !side_a;
            if side_b == 0 {
                continue;
            }
            if let Some(dec) = try_pivot_split(g, pivot, side_a, side_b) {
                if certificate_holds(g, &dec.order, dec.k) {
                    return Some(dec);
                }
            }
        }
    }
    None
}

fn try_pivot_split(
    g: &SimpleGraph,
    pivot: usize,
    side_a: u64,
    side_b: u64,
) -> Option<PivotDecomposition> {
    // complete join between the sides
    let mut a_iter = side_a;
    while a_iter != 0 {
        let a = a_iter.trailing_zeros() as usize;
        a_iter &= a_iter - 1;
        if g.neighbors_mask(a) & side_b != side_b {
            return None;
        }
    }
    let mut path_a = induced_path_order(g, side_a)?;
    let mut path_b = induced_path_order(g, side_b)?;

    let nbrs = g.neighbors_mask(pivot);
    if (nbrs & side_a).count_ones() != 1 || (nbrs & side_b).count_ones() != 1 {
        return None;
    }
    let na = (nbrs & side_a).trailing_zeros() as usize;
    let nb = (nbrs & side_b).trailing_zeros() as usize;
    // pivot must sit between one endpoint of each side path
    if *path_a.last().unwrap() != na {
        if path_a[0] == na {
            path_a.reverse();
        } else {
            return None;
        }
    }
    if path_b[0] != nb {
        if *path_b.last().unwrap() == nb {
            path_b.reverse();
        } else {
            return None;
        }
    }
    let mut order = path_a;
    let k = order.len() + 1;
    order.push(pivot);
    order.extend_from_slice(&path_b);
    let n = order.len();
    // canonical direction: smaller side first
    if n + 1 - k < k {
        order.reverse();
        return Some(PivotDecomposition {
            order,
            k: n + 1 - k,
        });
    }
    Some(PivotDecomposition { order, k })
}

/// Counterexample record from the exhaustive theorem check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub n: usize,
    pub mask: u64,
    pub spectral_embeddable: bool,
    pub path_or_complete: bool,
}

/// Per-order progress record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelStats {
    pub n: usize,
    pub masks: u64,
    pub connected: u64,
    pub mismatches: usize,
}

fn is_path_or_complete(g: &SimpleGraph) -> bool {
    let n = g.n();
    if (0..n).all(|v| g.degree(v) == n - 1) {
        return true;
    }
    induced_path_order(g, g.full_mask()).is_some()
}

const THEOREM_MAX_N: usize = 7;

/// Exhaustively checks every connected unweighted graph on up to `max_n`
/// vertices: the spectral embeddability verdict of its shortest-path
/// metric must equal "the graph is a path or complete".
///
/// Enumerates all `2^(n(n-1)/2)` adjacency masks with no isomorphism
/// reduction, fanned out over worker threads; counterexamples come back
/// sorted by `(n, mask)`.
pub fn verify_unweighted_theorem(max_n: usize, tol: f64) -> Result<Vec<Counterexample>> {
    verify_unweighted_theorem_with(max_n, tol, |_| {})
}

/// Same as [`verify_unweighted_theorem`], invoking `on_level` after each
/// graph order finishes.
pub fn verify_unweighted_theorem_with(
    max_n: usize,
    tol: f64,
    mut on_level: impl FnMut(&LevelStats),
) -> Result<Vec<Counterexample>> {
    if max_n > THEOREM_MAX_N {
        return Err(Error::BudgetExceeded {
            required: 1u128 << (max_n * (max_n - 1) / 2),
            budget: 1 << (THEOREM_MAX_N * (THEOREM_MAX_N - 1) / 2),
        });
    }
    let mut all = Vec::new();
    for n in 1..=max_n {
        let bits = n * (n - 1) / 2;
        let total: u64 = 1 << bits;
        let chunk: u64 = 1 << 12;
        let starts: Vec<u64> = (0..total).step_by(chunk as usize).collect();
        let per_chunk: Vec<(u64, Vec<Counterexample>)> = starts
            .par_iter()
            .map(|&start| {
                let end = (start + chunk).min(total);
                let mut connected = 0u64;
                let mut bad = Vec::new();
                for mask in start..end {
                    let g = SimpleGraph::from_mask(n, mask).expect("order within bounds");
                    if !g.is_connected() {
                        continue;
                    }
                    connected += 1;
                    let m = g.metric().expect("connected graph has a metric");
                    let spectral = is_embeddable(&m, tol).embeddable;
                    let structural = is_path_or_complete(&g);
                    if spectral != structural {
                        bad.push(Counterexample {
                            n,
                            mask,
                            spectral_embeddable: spectral,
                            path_or_complete: structural,
                        });
                    }
                }
                (connected, bad)
            })
            .collect();
        let mut connected = 0u64;
        let mut level_bad: Vec<Counterexample> = Vec::new();
        for (c, bad) in per_chunk {
            connected += c;
            level_bad.extend(bad);
        }
        level_bad.sort_by_key(|c| c.mask);
        on_level(&LevelStats {
            n,
            masks: total,
            connected,
            mismatches: level_bad.len(),
        });
        all.extend(level_bad);
    }
    Ok(all)
}

/// True when some vertex has degree at least 3 and a non-complete closed
/// neighborhood; such graphs can never embed.
pub fn has_incomplete_branch_vertex(g: &SimpleGraph) -> bool {
    let n = g.n();
    (0..n).any(|v| {
        if g.degree(v) < 3 {
            return false;
        }
        let nbrs = g.neighbors_mask(v);
        for u in 0..n {
            if nbrs >> u & 1 == 0 {
                continue;
            }
            for w in (u + 1)..n {
                if nbrs >> w & 1 == 1 && !g.has_edge(u, w) {
                    return true;
                }
            }
        }
        false
    })
}
