//! Dense symmetric matrices: Jacobi eigendecomposition, double centering,
//! definiteness classification, and the centered sum-of-squares identity.

use crate::error::{Error, Result};

/// Dense symmetric matrix, symmetrized on construction.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    /// Builds a matrix from full rows, averaging `a[i][j]` and `a[j][i]`
    /// so the stored entries are exactly symmetric.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
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
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let v = 0.5 * (rows[i][j] + rows[j][i]);
                data[i * n + j] = v;
                data[j * n + i] = v;
            }
        }
        Ok(SymmetricMatrix { n, data })
    }

    /// Builds from an entry function; `f(i, j)` is only consulted for `i <= j`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                data[i * n + j] = v;
                data[j * n + i] = v;
            }
        }
        Ok(SymmetricMatrix { n, data })
    }

    pub fn zeros(n: usize) -> Result<Self> {
        Self::from_fn(n, |_, _| 0.0)
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::from_fn(n, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
        self.data[j * self.n + i] = v;
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| self.data[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }

    /// Quadratic form `x^T A x`.
    pub fn quadratic_form(&self, x: &[f64]) -> f64 {
        assert_eq!(x.len(), self.n);
        let mut acc = 0.0;
        for i in 0..self.n {
            let mut row = 0.0;
            for j in 0..self.n {
                row += self.get(i, j) * x[j];
            }
            acc += x[i] * row;
        }
        acc
    }

    fn check_finite(&self) -> Result<()> {
        for i in 0..self.n {
            for j in 0..self.n {
                if !self.get(i, j).is_finite() {
                    return Err(Error::NonFiniteEntry { i, j });
                }
            }
        }
        Ok(())
    }
}

/// Full eigendecomposition of a symmetric matrix.
///
/// Eigenvalues sorted ascending; `eigenvectors[i]` is the unit eigenvector
/// for `eigenvalues[i]`, sign-fixed so its first entry above 1e-12 in
/// magnitude is positive.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Vec<Vec<f64>>,
}

impl EigenDecomposition {
    pub fn lambda_min(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn lambda_max(&self) -> f64 {
        *self.eigenvalues.last().unwrap()
    }

    /// Frobenius norm of `V diag(lambda) V^T - A`.
    pub fn reconstruction_error(&self, a: &SymmetricMatrix) -> f64 {
        let n = a.n();
        let mut err = 0.0;
        for i in 0..n {
            for j in 0..n {
                let mut s = 0.0;
                for (lam, v) in self.eigenvalues.iter().zip(&self.eigenvectors) {
                    s += lam * v[i] * v[j];
                }
                let d = s - a.get(i, j);
                err += d * d;
            }
        }
        err.sqrt()
    }
}

const JACOBI_MAX_SWEEPS: usize = 100;
const JACOBI_REL_THRESHOLD: f64 = 1e-14;

/// Cyclic Jacobi eigensolver.
///
/// Sweeps until the off-diagonal Frobenius norm drops below
/// `1e-14 * ||A||_F`, capped at 100 sweeps.
pub fn jacobi_eigen(a: &SymmetricMatrix) -> Result<EigenDecomposition> {
    a.check_finite()?;
    let n = a.n();
    let norm = a.frobenius_norm();
    let threshold = JACOBI_REL_THRESHOLD * norm;

    let mut m = a.data.clone();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }

    let off = |m: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += m[i * n + j] * m[i * n + j];
                }
            }
        }
        s.sqrt()
    };

    for _sweep in 0..JACOBI_MAX_SWEEPS {
        if off(&m) <= threshold {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = m[p * n + p];
                let aqq = m[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.abs() > 1e154 {
                    // avoid overflow in theta^2
                    1.0 / (2.0 * theta)
                } else {
                    let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
                    sign / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);

                m[p * n + p] = app - t * apq;
                m[q * n + q] = aqq + t * apq;
                m[p * n + q] = 0.0;
                m[q * n + p] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = m[r * n + p];
                    let arq = m[r * n + q];
                    let new_rp = arp - s * (arq + tau * arp);
                    let new_rq = arq + s * (arp - tau * arq);
                    m[r * n + p] = new_rp;
                    m[p * n + r] = new_rp;
                    m[r * n + q] = new_rq;
                    m[q * n + r] = new_rq;
                }
                for r in 0..n {
                    let vrp = v[r * n + p];
                    let vrq = v[r * n + q];
                    v[r * n + p] = vrp - s * (vrq + tau * vrp);
                    v[r * n + q] = vrq + s * (vrp - tau * vrq);
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[i * n + i].total_cmp(&m[j * n + j]));

    let eigenvalues: Vec<f64> = order.iter().map(|&i| m[i * n + i]).collect();
    let eigenvectors: Vec<Vec<f64>> = order
        .iter()
        .map(|&col| {
            let mut vec_col: Vec<f64> = (0..n).map(|r| v[r * n + col]).collect();
            if let Some(first) = vec_col.iter().find(|x| x.abs() > 1e-12) {
                if *first < 0.0 {
                    for x in &mut vec_col {
                        *x = -*x;
                    }
                }
            }
            vec_col
        })
        .collect();

    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

/// Projects out row, column, and grand means:
/// `(I - J/n)^T A (I - J/n)`.
///
/// The result annihilates the all-ones vector.
pub fn double_center(a: &SymmetricMatrix) -> SymmetricMatrix {
    let n = a.n();
    let nf = n as f64;
    let row_mean: Vec<f64> = (0..n)
        .map(|i| (0..n).map(|j| a.get(i, j)).sum::<f64>() / nf)
        .collect();
    let grand = row_mean.iter().sum::<f64>() / nf;
    SymmetricMatrix::from_fn(n, |i, j| a.get(i, j) - row_mean[i] - row_mean[j] + grand)
        .expect("same dimension as input")
}

/// Sign classification of a symmetric matrix's spectrum.
#[derive(Debug, Clone, PartialEq)]
pub enum Definiteness {
    NegativeSemiDefinite { lambda_min: f64, lambda_max: f64 },
    PositiveSemiDefinite { lambda_min: f64, lambda_max: f64 },
    Indefinite { lambda_min: f64, lambda_max: f64 },
    Zero { lambda_min: f64, lambda_max: f64 },
}

/// Classifies eigenvalue signs against `tol`.
///
/// `tol = None` uses the default `1e-9 * max(1, |lambda|_max)`.
pub fn definiteness(a: &SymmetricMatrix, tol: Option<f64>) -> Result<Definiteness> {
    let eig = jacobi_eigen(a)?;
    let lo = eig.lambda_min();
    let hi = eig.lambda_max();
    let scale = lo.abs().max(hi.abs());
    let tol = tol.unwrap_or(1e-9 * scale.max(1.0));
    Ok(if lo.abs() <= tol && hi.abs() <= tol {
        Definiteness::Zero {
            lambda_min: lo,
            lambda_max: hi,
        }
    } else if hi <= tol {
        Definiteness::NegativeSemiDefinite {
            lambda_min: lo,
            lambda_max: hi,
        }
    } else if lo >= -tol {
        Definiteness::PositiveSemiDefinite {
            lambda_min: lo,
            lambda_max: hi,
        }
    } else {
        Definiteness::Indefinite {
            lambda_min: lo,
            lambda_max: hi,
        }
    })
}

/// Evaluates both sides of the centered sum-of-squares identity
/// `n * sum_i ||a_i - mean||^2 = sum_{i<j} ||a_i - a_j||^2`
/// by independent routes and returns `(lhs, rhs)`.
pub fn centered_sum_of_squares(points: &[Vec<f64>]) -> Result<(f64, f64)> {
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

    let mut mean = vec![0.0; dim];
    for p in points {
        for (m, x) in mean.iter_mut().zip(p) {
            *m += x;
        }
    }
    for m in &mut mean {
        *m /= n as f64;
    }
    let lhs = n as f64
        * points
            .iter()
            .map(|p| {
                p.iter()
                    .zip(&mean)
                    .map(|(x, m)| (x - m) * (x - m))
                    .sum::<f64>()
            })
            .sum::<f64>();

    let mut rhs = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            rhs += points[i]
                .iter()
                .zip(&points[j])
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>();
        }
    }
    Ok((lhs, rhs))
}
