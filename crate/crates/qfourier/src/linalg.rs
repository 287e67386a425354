//! Dense complex linear algebra sized for operators up to about 2^10 x 2^10.
//!
//! Provides Hermitian eigendecomposition by cyclic Jacobi sweeps, spectral
//! matrix exponentials, and LU solves with a one-norm condition estimate.

use num_complex::Complex64;
use thiserror::Error;

/// Condition number at or above which a linear solve is flagged as
/// ill-conditioned. The flag is a warning; results are returned unchanged.
pub const CONDITION_LIMIT: f64 = 1e8;

/// Relative symmetry defect accepted by [`eigendecompose`].
pub const HERMITICITY_TOL: f64 = 1e-10;

const MAX_JACOBI_SWEEPS: usize = 60;

/// Errors from the linear algebra kernel.
#[derive(Debug, Clone, Error)]
pub enum LinalgError {
    #[error("matrix is not hermitian: symmetry defect {defect:.3e} exceeds {bound:.3e}")]
    NotHermitian { defect: f64, bound: f64 },
    #[error("jacobi eigensolver did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
    #[error("matrix is numerically singular (pivot magnitude {pivot:.3e})")]
    Singular { pivot: f64 },
}

/// Square complex matrix with row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be at least 1");
        Self {
            dim,
            data: vec![Complex64::ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex64::ONE;
        }
        m
    }

    /// Build a matrix from a row-major closure.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Build from nested rows. Panics unless the rows form a square matrix.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Self {
        let dim = rows.len();
        assert!(
            rows.iter().all(|r| r.len() == dim),
            "rows must form a square matrix"
        );
        Self::from_fn(dim, |i, j| rows[i][j])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn conjugate_transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)].conj())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "matrix product dimension mismatch");
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == Complex64::ZERO {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn matvec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(self.dim, v.len(), "matrix-vector dimension mismatch");
        let n = self.dim;
        let mut out = vec![Complex64::ZERO; n];
        for i in 0..n {
            let mut acc = Complex64::ZERO;
            for j in 0..n {
                acc += self[(i, j)] * v[j];
            }
            out[i] = acc;
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "matrix sum dimension mismatch");
        Self::from_fn(self.dim, |i, j| self[(i, j)] + other[(i, j)])
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "matrix difference dimension mismatch");
        Self::from_fn(self.dim, |i, j| self[(i, j)] - other[(i, j)])
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self::from_fn(self.dim, |i, j| factor * self[(i, j)])
    }

    /// Kronecker product `self (x) other`.
    pub fn kron(&self, other: &Self) -> Self {
        let (a, b) = (self.dim, other.dim);
        Self::from_fn(a * b, |i, j| self[(i / b, j / b)] * other[(i % b, j % b)])
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    /// Largest entry magnitude.
    pub fn max_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Maximum absolute column sum.
    pub fn one_norm(&self) -> f64 {
        (0..self.dim)
            .map(|j| (0..self.dim).map(|i| self[(i, j)].norm()).sum())
            .fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest magnitude of `A - A^dagger` entries.
    pub fn hermiticity_defect(&self) -> f64 {
        let mut defect = 0.0f64;
        for i in 0..self.dim {
            for j in i..self.dim {
                defect = defect.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        defect
    }

    /// Largest entry of `A^dagger A - I`.
    pub fn unitarity_defect(&self) -> f64 {
        let product = self.conjugate_transpose().mul(self);
        product.sub(&Self::identity(self.dim)).max_norm()
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.unitarity_defect() <= tol
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.dim + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.dim + j]
    }
}

/// Hermitian operator with its cached spectral decomposition.
///
/// Eigenvalues are ascending with multiplicity; eigenvectors are the matching
/// orthonormal columns of [`HermitianOperator::eigenvectors`].
#[derive(Debug, Clone)]
pub struct HermitianOperator {
    matrix: ComplexMatrix,
    eigenvalues: Vec<f64>,
    eigenvectors: ComplexMatrix,
}

impl HermitianOperator {
    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn eigenvectors(&self) -> &ComplexMatrix {
        &self.eigenvectors
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// Unitary `exp(-i t H)` assembled from the spectral decomposition, so
    /// that exact spectral identities (periodicity, group law) hold to
    /// round-off.
    pub fn evolve(&self, t: f64) -> ComplexMatrix {
        let n = self.dim();
        let v = &self.eigenvectors;
        let mut out = ComplexMatrix::zeros(n);
        for k in 0..n {
            let phase = Complex64::from_polar(1.0, -t * self.eigenvalues[k]);
            for i in 0..n {
                let left = phase * v[(i, k)];
                if left == Complex64::ZERO {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += left * v[(j, k)].conj();
                }
            }
        }
        out
    }

    /// Apply `exp(-i t H)` to a state vector in O(n^2) via the eigenbasis.
    pub fn evolve_state(&self, t: f64, psi: &[Complex64]) -> Vec<Complex64> {
        let n = self.dim();
        assert_eq!(psi.len(), n, "state dimension mismatch");
        let v = &self.eigenvectors;
        // coefficients in the eigenbasis
        let mut coeffs = vec![Complex64::ZERO; n];
        for k in 0..n {
            let mut acc = Complex64::ZERO;
            for i in 0..n {
                acc += v[(i, k)].conj() * psi[i];
            }
            coeffs[k] = acc * Complex64::from_polar(1.0, -t * self.eigenvalues[k]);
        }
        let mut out = vec![Complex64::ZERO; n];
        for k in 0..n {
            let c = coeffs[k];
            if c == Complex64::ZERO {
                continue;
            }
            for i in 0..n {
                out[i] += v[(i, k)] * c;
            }
        }
        out
    }
}

/// Decompose a Hermitian matrix into ascending eigenvalues and an orthonormal
/// eigenbasis.
///
/// The input must be Hermitian within a relative tolerance of
/// [`HERMITICITY_TOL`]; it is symmetrized before the Jacobi sweeps so the
/// stored matrix satisfies the tighter type invariant.
pub fn eigendecompose(matrix: &ComplexMatrix) -> Result<HermitianOperator, LinalgError> {
    let n = matrix.dim();
    let scale = matrix.max_norm();
    let defect = matrix.hermiticity_defect();
    let bound = HERMITICITY_TOL * scale.max(f64::MIN_POSITIVE);
    if defect > bound {
        return Err(LinalgError::NotHermitian { defect, bound });
    }

    let symmetrized =
        ComplexMatrix::from_fn(n, |i, j| 0.5 * (matrix[(i, j)] + matrix[(j, i)].conj()));

    let mut a = symmetrized.clone();
    let mut v = ComplexMatrix::identity(n);
    let frob = a.frobenius_norm().max(f64::MIN_POSITIVE);
    let target = 1e-14 * frob;
    let skip = target / (8.0 * (n * n) as f64);

    let mut converged = false;
    for _ in 0..MAX_JACOBI_SWEEPS {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off += 2.0 * a[(p, q)].norm_sqr();
            }
        }
        if off.sqrt() <= target {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                let r = apq.norm();
                if r <= skip {
                    continue;
                }
                let w = apq / r;
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let tau = (aqq - app) / (2.0 * r);
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // unitary G: G_pp = c, G_pq = s, G_qp = -s conj(w), G_qq = c conj(w)
                let g_qp = -s * w.conj();
                let g_qq = c * w.conj();
                // A <- A G (columns p, q)
                for i in 0..n {
                    let aip = a[(i, p)];
                    let aiq = a[(i, q)];
                    a[(i, p)] = c * aip + g_qp * aiq;
                    a[(i, q)] = s * aip + g_qq * aiq;
                }
                // A <- G^dagger A (rows p, q)
                for j in 0..n {
                    let apj = a[(p, j)];
                    let aqj = a[(q, j)];
                    a[(p, j)] = c * apj - s * w * aqj;
                    a[(q, j)] = s * apj + c * w * aqj;
                }
                a[(p, q)] = Complex64::ZERO;
                a[(q, p)] = Complex64::ZERO;
                // V <- V G
                for i in 0..n {
                    let vip = v[(i, p)];
                    let viq = v[(i, q)];
                    v[(i, p)] = c * vip + g_qp * viq;
                    v[(i, q)] = s * vip + g_qq * viq;
                }
            }
        }
    }
    if !converged {
        return Err(LinalgError::NoConvergence {
            sweeps: MAX_JACOBI_SWEEPS,
        });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let eigenvalues: Vec<f64> = order.iter().map(|&k| a[(k, k)].re).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, |i, j| v[(i, order[j])]);

    Ok(HermitianOperator {
        matrix: symmetrized,
        eigenvalues,
        eigenvectors,
    })
}

/// LU factorization with partial pivoting, kept around so the Fourier solvers
/// can price the conditioning of a node set before spending any function
/// evaluations on it.
#[derive(Debug, Clone)]
pub(crate) struct LuFactors {
    dim: usize,
    lu: ComplexMatrix,
    pivots: Vec<usize>,
    one_norm: f64,
}

impl LuFactors {
    pub(crate) fn factor(matrix: &ComplexMatrix) -> Result<Self, LinalgError> {
        let n = matrix.dim();
        let one_norm = matrix.one_norm();
        let mut lu = matrix.clone();
        let mut pivots = Vec::with_capacity(n);
        let pivot_floor = (n as f64) * f64::EPSILON * matrix.max_norm().max(f64::MIN_POSITIVE);
        for col in 0..n {
            let mut best = col;
            let mut best_mag = lu[(col, col)].norm();
            for row in (col + 1)..n {
                let mag = lu[(row, col)].norm();
                if mag > best_mag {
                    best = row;
                    best_mag = mag;
                }
            }
            if best_mag <= pivot_floor {
                return Err(LinalgError::Singular { pivot: best_mag });
            }
            if best != col {
                for j in 0..n {
                    let tmp = lu[(col, j)];
                    lu[(col, j)] = lu[(best, j)];
                    lu[(best, j)] = tmp;
                }
            }
            pivots.push(best);
            let inv_pivot = Complex64::ONE / lu[(col, col)];
            for row in (col + 1)..n {
                let factor = lu[(row, col)] * inv_pivot;
                lu[(row, col)] = factor;
                if factor == Complex64::ZERO {
                    continue;
                }
                for j in (col + 1)..n {
                    let sub = factor * lu[(col, j)];
                    lu[(row, j)] -= sub;
                }
            }
        }
        Ok(Self {
            dim: n,
            lu,
            pivots,
            one_norm,
        })
    }

    pub(crate) fn solve(&self, rhs: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(rhs.len(), self.dim, "right-hand side length mismatch");
        let n = self.dim;
        let mut x = rhs.to_vec();
        for col in 0..n {
            x.swap(col, self.pivots[col]);
        }
        // forward: L has unit diagonal
        for i in 1..n {
            let mut acc = x[i];
            for j in 0..i {
                acc -= self.lu[(i, j)] * x[j];
            }
            x[i] = acc;
        }
        // backward
        for i in (0..n).rev() {
            let mut acc = x[i];
            for j in (i + 1)..n {
                acc -= self.lu[(i, j)] * x[j];
            }
            x[i] = acc / self.lu[(i, i)];
        }
        x
    }

    /// One-norm condition estimate via the explicit inverse, column by
    /// column. Cubic like the factorization itself; gates warnings only.
    pub(crate) fn condition(&self) -> f64 {
        let n = self.dim;
        let mut inv_norm = 0.0f64;
        let mut unit = vec![Complex64::ZERO; n];
        for j in 0..n {
            unit[j] = Complex64::ONE;
            let col = self.solve(&unit);
            unit[j] = Complex64::ZERO;
            inv_norm = inv_norm.max(col.iter().map(|z| z.norm()).sum());
        }
        self.one_norm * inv_norm
    }
}

/// Result of [`solve_linear`].
#[derive(Debug, Clone)]
pub struct LinearSolution {
    pub solution: Vec<Complex64>,
    pub condition: f64,
}

impl LinearSolution {
    pub fn ill_conditioned(&self) -> bool {
        self.condition >= CONDITION_LIMIT
    }
}

/// Solve `A x = y` by LU with partial pivoting, reporting a one-norm
/// condition estimate alongside the solution.
pub fn solve_linear(a: &ComplexMatrix, y: &[Complex64]) -> Result<LinearSolution, LinalgError> {
    let factors = LuFactors::factor(a)?;
    let condition = factors.condition();
    let solution = factors.solve(y);
    Ok(LinearSolution {
        solution,
        condition,
    })
}
