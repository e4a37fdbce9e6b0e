//! Hilbert-space embeddability of finite metric spaces.
//!
//! A finite metric embeds isometrically in a Hilbert space exactly when its
//! doubly-centered squared-distance matrix is negative semidefinite. The
//! constructive side anchors a kernel at a base point x0,
//! `K[x][y] = d(x,x0)^2 + d(y,x0)^2 - d(x,y)^2`, whose half is the Gram
//! matrix of explicit Euclidean coordinates.

use crate::error::{Error, Result};
use crate::metric::MetricSpace;
use crate::symmat::{double_center, jacobi_eigen, SymmetricMatrix};

/// Verdict of the spectral embeddability test.
///
/// `witness` is present exactly when the metric is not embeddable; it is a
/// unit vector orthogonal to the all-ones vector with `witness^T D witness
/// > 0` for the squared-distance matrix D.
#[derive(Debug, Clone)]
pub struct EmbeddabilityReport {
    pub embeddable: bool,
    /// Largest eigenvalue of the doubly-centered squared-distance matrix.
    pub lambda_max: f64,
    pub witness: Option<Vec<f64>>,
}

/// Kernel matrix anchored at `base`; the base row and column are zero.
#[derive(Debug, Clone)]
pub struct Kernel {
    pub base: usize,
    pub k: SymmetricMatrix,
}

/// Euclidean coordinates realizing a metric.
#[derive(Debug, Clone)]
pub struct Embedding {
    pub base: usize,
    /// `coords[i]` is the i-th point in R^rank.
    pub coords: Vec<Vec<f64>>,
    pub rank: usize,
    /// Max absolute error over pairs between realized and given distances.
    pub residual: f64,
}

/// Entrywise square of the distance matrix.
pub fn squared_distance_matrix(m: &MetricSpace) -> SymmetricMatrix {
    SymmetricMatrix::from_fn(m.n(), |i, j| {
        let d = m.dist(i, j);
        d * d
    })
    .expect("metric has at least one point")
}

/// Quadratic form `alpha^T D alpha` against the squared-distance matrix.
pub fn quadratic_form(m: &MetricSpace, alpha: &[f64]) -> f64 {
    squared_distance_matrix(m).quadratic_form(alpha)
}

/// Spectral embeddability test.
///
/// Embeddable iff the largest eigenvalue of the centered squared-distance
/// matrix is at most `tol`; otherwise the eigenvector of that eigenvalue is
/// returned as a witness, re-centered and sign-normalized.
pub fn is_embeddable(m: &MetricSpace, tol: f64) -> EmbeddabilityReport {
    let centered = double_center(&squared_distance_matrix(m));
    let eig = jacobi_eigen(&centered).expect("metric distances are finite");
    let lambda_max = eig.lambda_max();
    if lambda_max <= tol {
        return EmbeddabilityReport {
            embeddable: true,
            lambda_max,
            witness: None,
        };
    }
    let n = m.n();
    let mut alpha = eig.eigenvectors.last().unwrap().clone();
    // the centered matrix annihilates the ones vector, so the component
    // along it is pure rounding noise; remove it outright
    let mean = alpha.iter().sum::<f64>() / n as f64;
    for x in &mut alpha {
        *x -= mean;
    }
    let norm = alpha.iter().map(|x| x * x).sum::<f64>().sqrt();
    for x in &mut alpha {
        *x /= norm;
    }
    if let Some(first) = alpha.iter().find(|x| x.abs() > 1e-12) {
        if *first < 0.0 {
            for x in &mut alpha {
                *x = -*x;
            }
        }
    }
    EmbeddabilityReport {
        embeddable: false,
        lambda_max,
        witness: Some(alpha),
    }
}

/// Kernel matrix anchored at `x0`.
pub fn kernel_at_base(m: &MetricSpace, x0: usize) -> Result<Kernel> {
    let n = m.n();
    if x0 >= n {
        return Err(Error::IndexOutOfRange { index: x0, len: n });
    }
    let k = SymmetricMatrix::from_fn(n, |x, y| {
        let dx = m.dist(x, x0);
        let dy = m.dist(y, x0);
        let dxy = m.dist(x, y);
        dx * dx + dy * dy - dxy * dxy
    })
    .expect("metric has at least one point");
    Ok(Kernel { base: x0, k })
}

/// Trace of the kernel at every base point, in point order.
///
/// Kernels at different bases need not be similar; their traces separate
/// them (P3 gives 10, 4, 10).
pub fn kernel_trace_profile(m: &MetricSpace) -> Vec<f64> {
    (0..m.n())
        .map(|x0| {
            kernel_at_base(m, x0)
                .expect("base index in range")
                .k
                .trace()
        })
        .collect()
}

/// Explicit embedding coordinates from the kernel at `x0`.
///
/// K/2 is eigendecomposed; eigenvalues in `[-tol, 0]` are clamped to zero,
/// anything below `-tol` aborts with `NotEmbeddable`. Coordinate axes are
/// ordered by decreasing eigenvalue and `rank` counts eigenvalues above
/// `tol`.
pub fn embed_coordinates(m: &MetricSpace, x0: usize, tol: f64) -> Result<Embedding> {
    let n = m.n();
    let kernel = kernel_at_base(m, x0)?;
    let half = SymmetricMatrix::from_fn(n, |i, j| 0.5 * kernel.k.get(i, j))
        .expect("kernel is nonempty");
    let eig = jacobi_eigen(&half).expect("kernel entries are finite");
    if eig.lambda_min() < -tol {
        return Err(Error::NotEmbeddable {
            lambda_min: eig.lambda_min(),
        });
    }
    let mut axes: Vec<(f64, &Vec<f64>)> = eig
        .eigenvalues
        .iter()
        .copied()
        .zip(&eig.eigenvectors)
        .filter(|(lam, _)| *lam > tol)
        .collect();
    axes.sort_by(|a, b| b.0.total_cmp(&a.0));
    let rank = axes.len();
    let coords: Vec<Vec<f64>> = (0..n)
        .map(|i| axes.iter().map(|(lam, v)| lam.sqrt() * v[i]).collect())
        .collect();

    let mut residual: f64 = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            let realized = point_distance(&coords[i], &coords[j]);
            residual = residual.max((realized - m.dist(i, j)).abs());
        }
    }
    Ok(Embedding {
        base: x0,
        coords,
        rank,
        residual,
    })
}

fn point_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// Max relative distance error of an embedding against its metric.
pub fn verify_isometry(e: &Embedding, m: &MetricSpace) -> Result<f64> {
    let n = m.n();
    if e.coords.len() != n {
        return Err(Error::SizeMismatch {
            left: e.coords.len(),
            right: n,
        });
    }
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            let realized = point_distance(&e.coords[i], &e.coords[j]);
            let want = m.dist(i, j);
            worst = worst.max((realized - want).abs() / want.max(1e-12));
        }
    }
    Ok(worst)
}
