//! Small dense complex matrices and a Hermitian Jacobi eigensolver.
//!
//! Frame operators here are Hermitian positive semidefinite and at most a
//! few hundred rows, so a dependency-free cyclic Jacobi solver with an
//! accuracy-controlled stopping rule is all that is needed. Singular values
//! of a d x M matrix come from the eigenvalues of its d x d Gram matrix.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Dense row-major complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Complex64::new(0.0, 0.0); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out.get(i, j) + a * rhs.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    /// The Gram matrix A A*, assembled Hermitian by construction: the upper
    /// triangle is computed, the diagonal is forced real, and the lower
    /// triangle mirrors by conjugation.
    pub fn gram(&self) -> Self {
        let n = self.rows;
        let mut g = Self::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let mut acc = Complex64::new(0.0, 0.0);
                for k in 0..self.cols {
                    acc += self.get(i, k) * self.get(j, k).conj();
                }
                if i == j {
                    g.set(i, i, Complex64::new(acc.re, 0.0));
                } else {
                    g.set(i, j, acc);
                    g.set(j, i, acc.conj());
                }
            }
        }
        g
    }

    pub fn frobenius(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest entry-wise deviation from self-adjointness.
    pub fn hermitian_defect(&self) -> f64 {
        assert_eq!(self.rows, self.cols);
        let mut worst = 0.0f64;
        for i in 0..self.rows {
            for j in i..self.cols {
                let d = (self.get(i, j) - self.get(j, i).conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    fn off_diagonal_norm(&self) -> f64 {
        let mut acc = 0.0;
        for i in 0..self.rows {
            for j in 0..self.cols {
                if i != j {
                    acc += self.get(i, j).norm_sqr();
                }
            }
        }
        acc.sqrt()
    }
}

/// Eigendecomposition of a Hermitian matrix: real eigenvalues in ascending
/// order, matching eigenvector columns.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: CMatrix,
}

const HERMITIAN_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 64;

/// Cyclic Jacobi rotations on a Hermitian matrix. Converges when the
/// off-diagonal Frobenius mass drops below 1e-12 times the matrix norm.
pub fn hermitian_eigen(matrix: &CMatrix) -> Result<HermitianEigen> {
    if matrix.rows() != matrix.cols() {
        return Err(Error::InvalidArgument(format!(
            "eigensolver needs a square matrix, got {}x{}",
            matrix.rows(),
            matrix.cols()
        )));
    }
    let n = matrix.rows();
    let defect = matrix.hermitian_defect();
    let scale = matrix.frobenius();
    if defect > HERMITIAN_TOL * scale.max(1.0) {
        return Err(Error::InvalidArgument(format!(
            "matrix is not Hermitian (defect {defect:.3e} at scale {scale:.3e})"
        )));
    }
    let mut a = matrix.clone();
    let mut v = CMatrix::identity(n);
    if scale == 0.0 || n == 1 {
        return Ok(sorted(a, v));
    }
    let target = HERMITIAN_TOL * scale;
    for _ in 0..MAX_SWEEPS {
        if a.off_diagonal_norm() <= target {
            return Ok(sorted(a, v));
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    if a.off_diagonal_norm() <= target {
        return Ok(sorted(a, v));
    }
    Err(Error::Numerical(format!(
        "jacobi sweep limit reached with off-diagonal mass {:.3e} (target {:.3e})",
        a.off_diagonal_norm(),
        target
    )))
}

/// One unitary plane rotation annihilating the (p, q) entry.
fn rotate(a: &mut CMatrix, v: &mut CMatrix, p: usize, q: usize) {
    let apq = a.get(p, q);
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    let phase = apq / mag;
    let app = a.get(p, p).re;
    let aqq = a.get(q, q).re;
    let tau = (aqq - app) / (2.0 * mag);
    // tan of the rotation angle, smaller root for stability
    let t = if tau.abs() > 1e150 {
        0.5 / tau
    } else {
        tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let n = a.rows();
    for i in 0..n {
        if i == p || i == q {
            continue;
        }
        let aip = a.get(i, p);
        let aiq = a.get(i, q);
        let new_ip = aip * c - aiq * phase.conj() * s;
        let new_iq = aip * phase * s + aiq * c;
        a.set(i, p, new_ip);
        a.set(i, q, new_iq);
        a.set(p, i, new_ip.conj());
        a.set(q, i, new_iq.conj());
    }
    a.set(p, p, Complex64::new(app - t * mag, 0.0));
    a.set(q, q, Complex64::new(aqq + t * mag, 0.0));
    a.set(p, q, Complex64::new(0.0, 0.0));
    a.set(q, p, Complex64::new(0.0, 0.0));
    for i in 0..n {
        let vip = v.get(i, p);
        let viq = v.get(i, q);
        v.set(i, p, vip * c - viq * phase.conj() * s);
        v.set(i, q, vip * phase * s + viq * c);
    }
}

fn sorted(a: CMatrix, v: CMatrix) -> HermitianEigen {
    let n = a.rows();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a.get(i, i).re.partial_cmp(&a.get(j, j).re).unwrap());
    let values: Vec<f64> = order.iter().map(|&i| a.get(i, i).re).collect();
    let vectors = CMatrix::from_fn(n, n, |i, j| v.get(i, order[j]));
    HermitianEigen { values, vectors }
}
