//! Generators for the named metric families: paths, cycles, complete
//! graphs, the claw configurations, the Pythagorean K4-minus-edge family,
//! the S(n,k) pivot family, and seeded random Euclidean point sets, plus
//! the explicit witness vectors that certify non-embeddability.

use crate::error::{Error, Result};
use crate::metric::MetricSpace;
use crate::rng::SplitMix64;

/// The three four-point neighborhood configurations around a degree-3
/// center: the claw, the paw (claw plus a leaf edge), and the diamond
/// (two leaf edges, i.e. K4 minus an edge).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClawVariant {
    Claw,
    Paw,
    Diamond,
}

/// Parameter record for every generator.
#[derive(Debug, Clone, PartialEq)]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    Claw,
    ClawPlusEdge,
    Diamond,
    PythagoreanK4e { z: u64, pairs: [(u64, u64); 3] },
    Snk { n: usize, k: usize },
    RandomEuclidean { n: usize, dim: usize, seed: u64 },
}

/// Builds the metric space of a family instance.
pub fn generate(spec: &FamilySpec) -> Result<MetricSpace> {
    match *spec {
        FamilySpec::Path { n } => path_metric(n),
        FamilySpec::Cycle { n } => cycle_metric(n),
        FamilySpec::Complete { n } => complete_metric(n),
        FamilySpec::Claw => claw_variant_metric(ClawVariant::Claw),
        FamilySpec::ClawPlusEdge => claw_variant_metric(ClawVariant::Paw),
        FamilySpec::Diamond => claw_variant_metric(ClawVariant::Diamond),
        FamilySpec::PythagoreanK4e { z, pairs } => pythagorean_k4e(z, &pairs),
        FamilySpec::Snk { n, k } => snk_metric(n, k),
        FamilySpec::RandomEuclidean { n, dim, seed } => random_euclidean(n, dim, seed),
    }
}

fn path_metric(n: usize) -> Result<MetricSpace> {
    if n == 0 {
        return Err(Error::BadParameters {
            reason: "path needs n >= 1".into(),
        });
    }
    let rows: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| (i as f64 - j as f64).abs()).collect())
        .collect();
    MetricSpace::new((0..n).map(|i| i.to_string()).collect(), &rows, 1e-9)
}

fn cycle_metric(n: usize) -> Result<MetricSpace> {
    if n < 3 {
        return Err(Error::BadParameters {
            reason: format!("cycle needs n >= 3, got {n}"),
        });
    }
    let rows: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let gap = (i as isize - j as isize).unsigned_abs();
                    gap.min(n - gap) as f64
                })
                .collect()
        })
        .collect();
    MetricSpace::new((0..n).map(|i| i.to_string()).collect(), &rows, 1e-9)
}

fn complete_metric(n: usize) -> Result<MetricSpace> {
    if n == 0 {
        return Err(Error::BadParameters {
            reason: "complete graph needs n >= 1".into(),
        });
    }
    let rows: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 0.0 } else { 1.0 }).collect())
        .collect();
    MetricSpace::new((0..n).map(|i| i.to_string()).collect(), &rows, 1e-9)
}

/// Four-point metrics of the three neighborhood configurations, point
/// order (v, u, z, w) with v the center.
fn claw_variant_metric(variant: ClawVariant) -> Result<MetricSpace> {
    let rows = match variant {
        // star: leaves pairwise at distance 2
        ClawVariant::Claw => [
            [0.0, 1.0, 1.0, 1.0],
            [1.0, 0.0, 2.0, 2.0],
            [1.0, 2.0, 0.0, 2.0],
            [1.0, 2.0, 2.0, 0.0],
        ],
        // star plus edge u~z
        ClawVariant::Paw => [
            [0.0, 1.0, 1.0, 1.0],
            [1.0, 0.0, 1.0, 2.0],
            [1.0, 1.0, 0.0, 2.0],
            [1.0, 2.0, 2.0, 0.0],
        ],
        // star plus edges u~z and z~w
        ClawVariant::Diamond => [
            [0.0, 1.0, 1.0, 1.0],
            [1.0, 0.0, 1.0, 2.0],
            [1.0, 1.0, 0.0, 1.0],
            [1.0, 2.0, 1.0, 0.0],
        ],
    };
    let rows: Vec<Vec<f64>> = rows.iter().map(|r| r.to_vec()).collect();
    MetricSpace::new(
        vec!["v".into(), "u".into(), "z".into(), "w".into()],
        &rows,
        1e-9,
    )
}

/// Integer-distance four-point metrics whose critical graph is K4 minus an
/// edge: three points `((p_i^2 - q_i^2)/2, 0)` on the axis and `(0, z)`,
/// where each `p_i q_i = z` with `p_i` and `q_i` of equal parity, so every
/// hypotenuse `(p_i^2 + q_i^2)/2` is an integer.
fn pythagorean_k4e(z: u64, pairs: &[(u64, u64); 3]) -> Result<MetricSpace> {
    if z == 0 {
        return Err(Error::BadParameters {
            reason: "z must be positive".into(),
        });
    }
    let mut points: Vec<Vec<f64>> = Vec::with_capacity(4);
    for &(p, q) in pairs {
        if p * q != z {
            return Err(Error::BadParameters {
                reason: format!("pair ({p}, {q}) has product {} != z = {z}", p * q),
            });
        }
        if p % 2 != q % 2 {
            return Err(Error::BadParameters {
                reason: format!("pair ({p}, {q}) violates p = q (mod 2)"),
            });
        }
        let a = (p * p) as i64 - (q * q) as i64;
        points.push(vec![(a / 2) as f64, 0.0]);
    }
    for i in 0..3 {
        for j in (i + 1)..3 {
            if points[i][0] == points[j][0] {
                return Err(Error::BadParameters {
                    reason: format!(
                        "pairs {i} and {j} place coincident points at x = {}",
                        points[i][0]
                    ),
                });
            }
        }
    }
    points.push(vec![0.0, z as f64]);
    let mut m = MetricSpace::from_points(&points)?;
    // relabel to x1..x4
    let rows = m.rows();
    m = MetricSpace::new(
        vec!["x1".into(), "x2".into(), "x3".into(), "x4".into()],
        &rows,
        1e-9 * m.max_distance().max(1.0),
    )?;
    Ok(m)
}

/// All factor pairs (p, q) of z with p > q and equal parity, ordered by
/// increasing q.
pub fn pythagorean_pairs(z: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut q = 1;
    while q * q < z {
        if z % q == 0 {
            let p = z / q;
            if p % 2 == q % 2 {
                out.push((p, q));
            }
        }
        q += 1;
    }
    out
}

/// Grid family S(n,k): the origin, k-1 points along one axis, and n-k
/// points along the other, under the plane's Euclidean metric. Its
/// critical graph is the Hamiltonian pivot graph with pivot (0,0).
///
/// Points are listed in Hamiltonian-path order
/// `(k-1,0), ..., (1,0), (0,0), (0,1), ..., (0,n-k)`.
fn snk_metric(n: usize, k: usize) -> Result<MetricSpace> {
    if !(2..=n.saturating_sub(1)).contains(&k) {
        return Err(Error::BadParameters {
            reason: format!("S(n,k) needs 2 <= k <= n-1, got n = {n}, k = {k}"),
        });
    }
    let mut points: Vec<(usize, usize)> = Vec::with_capacity(n);
    for i in (1..k).rev() {
        points.push((i, 0));
    }
    points.push((0, 0));
    for j in 1..=(n - k) {
        points.push((0, j));
    }
    let coords: Vec<Vec<f64>> = points
        .iter()
        .map(|&(x, y)| vec![x as f64, y as f64])
        .collect();
    let labels: Vec<String> = points.iter().map(|&(x, y)| format!("({x},{y})")).collect();
    let m = MetricSpace::from_points(&coords)?;
    let rows = m.rows();
    MetricSpace::new(labels, &rows, 1e-9 * m.max_distance().max(1.0))
}

/// Seeded random point cloud under the Euclidean metric; points are drawn
/// from the splitmix64 standard normal stream, so equal seeds give equal
/// matrices everywhere.
pub fn random_euclidean(n: usize, dim: usize, seed: u64) -> Result<MetricSpace> {
    if n == 0 || dim == 0 {
        return Err(Error::BadParameters {
            reason: format!("need n >= 1 and dim >= 1, got n = {n}, dim = {dim}"),
        });
    }
    let mut rng = SplitMix64::new(seed);
    let points: Vec<Vec<f64>> = (0..n)
        .map(|_| (0..dim).map(|_| rng.next_normal()).collect())
        .collect();
    MetricSpace::from_points(&points)
}

/// Witness selector: the three four-point configurations and the two
/// cycle parities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessConfig {
    Claw,
    Paw,
    Diamond,
    /// Cycle on 2k vertices.
    EvenCycle { k: usize },
    /// Cycle on 2k+1 vertices.
    OddCycle { k: usize },
}

/// A coefficient vector certifying `alpha^T D alpha > 0`, zero-padded to
/// the full point count, along with the four vertices it loads.
#[derive(Debug, Clone, PartialEq)]
pub struct PaperWitness {
    pub vertices: [usize; 4],
    /// Length equals the point count of the matching family metric.
    pub alpha: Vec<f64>,
}

/// The quoted witness vectors.
///
/// Four-point witnesses apply to the claw-variant metrics in point order
/// (v, u, z, w). Cycle witnesses load vertices `(0, 2k-1, k-1, k)`
/// of an even cycle with `(1, -1, -1, 1)` and `(0, 1, k, k+1)` of an odd
/// cycle with `(1, -1, 1, -1)`; the quadratic forms evaluate to `8(k-1)`
/// and `2(2k-3)`.
pub fn paper_witness(config: WitnessConfig) -> Result<PaperWitness> {
    let (n, vertices, values): (usize, [usize; 4], [f64; 4]) = match config {
        WitnessConfig::Claw => (4, [0, 1, 2, 3], [-3.0, 1.0, 1.0, 1.0]),
        WitnessConfig::Paw => (4, [0, 1, 2, 3], [4.0, -1.0, -1.0, -2.0]),
        WitnessConfig::Diamond => (4, [0, 1, 2, 3], [1.0, -1.0, 1.0, -1.0]),
        WitnessConfig::EvenCycle { k } => {
            if k < 2 {
                return Err(Error::BadParameters {
                    reason: format!("even cycle witness needs k >= 2, got {k}"),
                });
            }
            (2 * k, [0, 2 * k - 1, k - 1, k], [1.0, -1.0, -1.0, 1.0])
        }
        WitnessConfig::OddCycle { k } => {
            if k < 2 {
                return Err(Error::BadParameters {
                    reason: format!("odd cycle witness needs k >= 2, got {k}"),
                });
            }
            (2 * k + 1, [0, 1, k, k + 1], [1.0, -1.0, 1.0, -1.0])
        }
    };
    let mut alpha = vec![0.0; n];
    for (idx, &v) in vertices.iter().enumerate() {
        alpha[v] = values[idx];
    }
    Ok(PaperWitness { vertices, alpha })
}

/// Family metric a witness applies to.
pub fn witness_metric(config: WitnessConfig) -> Result<MetricSpace> {
    match config {
        WitnessConfig::Claw => claw_variant_metric(ClawVariant::Claw),
        WitnessConfig::Paw => claw_variant_metric(ClawVariant::Paw),
        WitnessConfig::Diamond => claw_variant_metric(ClawVariant::Diamond),
        WitnessConfig::EvenCycle { k } => cycle_metric(2 * k),
        WitnessConfig::OddCycle { k } => cycle_metric(2 * k + 1),
    }
}
