//! Lowest eigenpairs of a symmetric tridiagonal operator with constant
//! off-diagonal, by Sturm-sequence bisection.

use alloc::vec;
use alloc::vec::Vec;

use super::SpectralError;

/// `diag` on the main diagonal, `offdiag` on both neighbours of it.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalOperator {
    diag: Vec<f64>,
    offdiag: f64,
}

impl TridiagonalOperator {
    pub fn new(diag: Vec<f64>, offdiag: f64) -> Self {
        Self { diag, offdiag }
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn offdiag(&self) -> f64 {
        self.offdiag
    }

    pub fn size(&self) -> usize {
        self.diag.len()
    }

    /// Gershgorin interval containing the whole spectrum.
    pub fn spectral_bounds(&self) -> (f64, f64) {
        let r = if self.diag.len() > 1 {
            2.0 * self.offdiag.abs()
        } else {
            0.0
        };
        let lo = self.diag.iter().fold(f64::INFINITY, |m, &d| m.min(d));
        let hi = self.diag.iter().fold(f64::NEG_INFINITY, |m, &d| m.max(d));
        (lo - r, hi + r)
    }

    /// Number of eigenvalues strictly below `lambda`, from the signs of the
    /// `LDL^T` pivots of `T - lambda I`.
    pub fn sturm_count(&self, lambda: f64) -> usize {
        let e2 = self.offdiag * self.offdiag;
        let pivmin = f64::MIN_POSITIVE.max(f64::EPSILON * f64::EPSILON * e2);
        let mut count = 0;
        let mut q = 1.0;
        for (i, &d) in self.diag.iter().enumerate() {
            q = if i == 0 {
                d - lambda
            } else {
                d - lambda - e2 / q
            };
            if q.abs() < pivmin {
                q = -pivmin;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// Shifted solve `(T - shift I) y = rhs` by the Thomas algorithm.
    fn solve_shifted(&self, shift: f64, rhs: &[f64]) -> Vec<f64> {
        let n = self.diag.len();
        let e = self.offdiag;
        let tiny = f64::EPSILON * (1.0 + e.abs());
        let mut c = vec![0.0; n];
        let mut y = vec![0.0; n];
        let mut denom = self.diag[0] - shift;
        if denom.abs() < tiny {
            denom = tiny;
        }
        c[0] = e / denom;
        y[0] = rhs[0] / denom;
        for i in 1..n {
            denom = self.diag[i] - shift - e * c[i - 1];
            if denom.abs() < tiny {
                denom = tiny;
            }
            c[i] = e / denom;
            y[i] = (rhs[i] - e * y[i - 1]) / denom;
        }
        for i in (0..n.saturating_sub(1)).rev() {
            y[i] -= c[i] * y[i + 1];
        }
        y
    }
}

/// The `k` smallest eigenvalues in ascending order.
///
/// Each value is bisected until its bracket collapses to adjacent floats,
/// which is the accuracy the Sturm count itself supports.
pub fn eigen_lowest(op: &TridiagonalOperator, k: usize) -> Result<Vec<f64>, SpectralError> {
    let size = op.size();
    if k == 0 || k > size {
        return Err(SpectralError::KOutOfRange { k, size });
    }
    let (lo0, hi0) = op.spectral_bounds();
    let mut out = Vec::with_capacity(k);
    let mut floor = lo0;
    for j in 0..k {
        let (mut lo, mut hi) = (floor, hi0);
        for _ in 0..400 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if op.sturm_count(mid) > j {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let value = 0.5 * (lo + hi);
        out.push(value);
        floor = lo;
    }
    Ok(out)
}

/// Unit eigenvector for a converged eigenvalue, by inverse iteration.
pub fn eigenvector(op: &TridiagonalOperator, lambda: f64) -> Vec<f64> {
    let n = op.size();
    let (lo, hi) = op.spectral_bounds();
    let shift = lambda + 1e-12 * (hi - lo).abs().max(1.0);
    let mut v = vec![1.0 / libm::sqrt(n as f64); n];
    for _ in 0..4 {
        let y = op.solve_shifted(shift, &v);
        let norm = libm::sqrt(y.iter().map(|x| x * x).sum());
        v = y.into_iter().map(|x| x / norm).collect();
    }
    // fix the sign so that the largest component is positive
    let big = v
        .iter()
        .fold(0.0f64, |m, &x| if x.abs() > m.abs() { x } else { m });
    if big < 0.0 {
        v.iter_mut().for_each(|x| *x = -*x);
    }
    v
}
