//! Dense real linear algebra for small spin clusters.
//!
//! Everything in the model is real in the computational basis (sy factors
//! only ever occur in pairs), so matrices are plain row-major `f64` arrays.
//! The eigensolver is a cyclic Jacobi sweep; the largest matrix in the crate
//! is 8x8.

mod roots;

use crate::error::{Error, Result};

pub use roots::eigenvalues_4x4;

/// Dense row-major matrix of `f64`.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    /// Zero matrix. `rows` and `cols` must be at least 1.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix dimensions must be >= 1");
        Matrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    /// Builds from nested rows; all rows must have equal length.
    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        assert!(!rows.is_empty() && !rows[0].is_empty());
        let cols = rows[0].len();
        let mut m = Matrix::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged row {i}");
            for (j, &x) in row.iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        m
    }

    /// Rank-one projector `v v^T`.
    pub fn outer(v: &[f64]) -> Self {
        let n = v.len();
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = v[i] * v[j];
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self[(i, l)];
                if a == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(l, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        out
    }

    pub fn scale(&self, s: f64) -> Matrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a *= s;
        }
        out
    }

    /// Adds `s * other` in place.
    pub fn axpy(&mut self, s: f64, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += s * b;
        }
    }

    pub fn trace(&self) -> f64 {
        assert!(self.is_square());
        (0..self.rows).map(|i| self[(i, i)]).sum()
    }

    /// Operator infinity norm (max absolute row sum).
    pub fn norm_inf(&self) -> f64 {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)].abs()).sum())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn frobenius(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// True iff `max |a_ij - a_ji| <= tol`.
    pub fn is_symmetric(&self, tol: f64) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if (self[(i, j)] - self[(j, i)]).abs() > tol {
                    return false;
                }
            }
        }
        true
    }

    pub fn symmetrize(&self) -> Matrix {
        assert!(self.is_square());
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                let v = 0.5 * (self[(i, j)] + self[(j, i)]);
                out[(i, j)] = v;
                out[(j, i)] = v;
            }
        }
        out
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Kronecker product: entry `((i*B.rows + r), (j*B.cols + c)) = A[i][j] * B[r][c]`.
pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let mut out = Matrix::zeros(a.rows * b.rows, a.cols * b.cols);
    for i in 0..a.rows {
        for j in 0..a.cols {
            let aij = a[(i, j)];
            if aij == 0.0 {
                continue;
            }
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out[(i * b.rows + r, j * b.cols + c)] = aij * b[(r, c)];
                }
            }
        }
    }
    out
}

/// Pauli operators in the basis (|0>, |1>) with sz|1> = +|1>, sz|0> = -|0>.
///
/// sy is purely imaginary; it enters the Hamiltonian only in pairs, so the
/// crate stores its real companion `sigma_y_real` with sy = i * sigma_y_real
/// and sy (x) sy = -(sigma_y_real (x) sigma_y_real).
pub mod pauli {
    use super::{kron, Matrix};

    pub fn identity2() -> Matrix {
        Matrix::identity(2)
    }

    pub fn sigma_x() -> Matrix {
        Matrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]])
    }

    /// diag(-1, +1): the unique sign convention under which |000> has field
    /// energy -3h.
    pub fn sigma_z() -> Matrix {
        Matrix::from_rows(&[vec![-1.0, 0.0], vec![0.0, 1.0]])
    }

    /// Real companion of sy (sy = i * this).
    pub fn sigma_y_real() -> Matrix {
        Matrix::from_rows(&[vec![0.0, 1.0], vec![-1.0, 0.0]])
    }

    /// The real 4x4 product sy (x) sy, the two-qubit spin-flip operator.
    pub fn spin_flip_two_qubit() -> Matrix {
        let y = sigma_y_real();
        kron(&y, &y).scale(-1.0)
    }
}

/// Eigenvalues (ascending) with matched orthonormal eigenvector columns.
#[derive(Clone, Debug)]
pub struct SpectralDecomposition {
    /// Eigenvalues in non-decreasing order.
    pub values: Vec<f64>,
    /// Column `i` is the unit eigenvector of `values[i]`.
    pub vectors: Matrix,
}

impl SpectralDecomposition {
    pub fn eigenvector(&self, i: usize) -> Vec<f64> {
        self.vectors.column(i)
    }

    /// `V diag(values) V^T`, for reconstruction checks.
    pub fn reconstruct(&self) -> Matrix {
        let n = self.values.len();
        let mut vw = self.vectors.clone();
        for j in 0..n {
            for i in 0..n {
                vw[(i, j)] *= self.values[j];
            }
        }
        vw.mul(&self.vectors.transpose())
    }
}

const JACOBI_MAX_SWEEPS: usize = 100;

/// Symmetric eigendecomposition by cyclic Jacobi rotations.
///
/// Sweeps until the off-diagonal Frobenius norm drops below
/// `1e-12 * ||A||_F`, capped at 100 sweeps. Eigenvalues are returned in
/// ascending order; each eigenvector's largest-magnitude component is made
/// non-negative so the decomposition is deterministic.
pub fn eigh_symmetric(a: &Matrix) -> Result<SpectralDecomposition> {
    if !a.is_square() {
        return Err(Error::Dimension {
            expected: a.rows(),
            got: a.cols(),
        });
    }
    let n = a.rows();
    let sym_tol = 1e-12 * a.norm_inf().max(1.0);
    if !a.is_symmetric(sym_tol) {
        let mut max_asym: f64 = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                max_asym = max_asym.max((a[(i, j)] - a[(j, i)]).abs());
            }
        }
        return Err(Error::NotSymmetric {
            max_asym,
            tol: sym_tol,
        });
    }

    let mut m = a.symmetrize();
    let mut v = Matrix::identity(n);
    let target = 1e-12 * a.frobenius();

    let mut converged = false;
    for _ in 0..JACOBI_MAX_SWEEPS {
        let mut off = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                off += 2.0 * m[(i, j)] * m[(i, j)];
            }
        }
        if off.sqrt() <= target {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = 0.5 * (m[(q, q)] - m[(p, p)]) / apq;
                let t = if theta == 0.0 {
                    1.0
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                let app = m[(p, p)];
                let aqq = m[(q, q)];
                m[(p, p)] = app - t * apq;
                m[(q, q)] = aqq + t * apq;
                m[(p, q)] = 0.0;
                m[(q, p)] = 0.0;
                for r in 0..n {
                    if r != p && r != q {
                        let arp = m[(r, p)];
                        let arq = m[(r, q)];
                        m[(r, p)] = c * arp - s * arq;
                        m[(p, r)] = m[(r, p)];
                        m[(r, q)] = s * arp + c * arq;
                        m[(q, r)] = m[(r, q)];
                    }
                    let vrp = v[(r, p)];
                    let vrq = v[(r, q)];
                    v[(r, p)] = c * vrp - s * vrq;
                    v[(r, q)] = s * vrp + c * vrq;
                }
            }
        }
    }
    if !converged {
        return Err(Error::NoConvergence {
            sweeps: JACOBI_MAX_SWEEPS,
        });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(i, i)].partial_cmp(&m[(j, j)]).unwrap());
    let values: Vec<f64> = order.iter().map(|&i| m[(i, i)]).collect();
    let mut vectors = Matrix::zeros(n, n);
    for (new_col, &old_col) in order.iter().enumerate() {
        let col = v.column(old_col);
        let lead = col
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.abs().partial_cmp(&y.1.abs()).unwrap())
            .map(|(_, &x)| x)
            .unwrap_or(1.0);
        let sign = if lead < 0.0 { -1.0 } else { 1.0 };
        for i in 0..n {
            vectors[(i, new_col)] = sign * col[i];
        }
    }
    Ok(SpectralDecomposition { values, vectors })
}

/// Real symmetric, unit-trace, positive-semidefinite matrix of dimension
/// 4 or 8. Construction validates trace to 1e-10 and eigenvalues down to
/// -1e-9.
#[derive(Clone, Debug)]
pub struct DensityMatrix {
    m: Matrix,
}

impl DensityMatrix {
    pub fn new(m: Matrix) -> Result<Self> {
        if !m.is_square() || !(m.rows() == 4 || m.rows() == 8) {
            return Err(Error::InvalidState(format!(
                "density matrix must be 4x4 or 8x8, got {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        if !m.is_symmetric(1e-10 * m.norm_inf().max(1.0)) {
            return Err(Error::InvalidState("density matrix is not symmetric".into()));
        }
        let tr = m.trace();
        if (tr - 1.0).abs() > 1e-10 {
            return Err(Error::InvalidState(format!(
                "trace {tr:.12} differs from 1 beyond 1e-10"
            )));
        }
        let dec = eigh_symmetric(&m)?;
        if dec.values[0] < -1e-9 {
            return Err(Error::InvalidState(format!(
                "eigenvalue {:.3e} below -1e-9: not positive semidefinite",
                dec.values[0]
            )));
        }
        Ok(DensityMatrix { m })
    }

    /// Projector |psi><psi| of a unit vector (dimension 4 or 8).
    pub fn from_pure(state: &[f64]) -> Result<Self> {
        let norm2: f64 = state.iter().map(|x| x * x).sum();
        if (norm2 - 1.0).abs() > 1e-10 {
            return Err(Error::InvalidState(format!(
                "pure state norm^2 = {norm2:.12} differs from 1"
            )));
        }
        DensityMatrix::new(Matrix::outer(state))
    }

    pub fn dim(&self) -> usize {
        self.m.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.m
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.m[(i, j)]
    }
}

/// Traces out one qubit of a three-qubit state; the two kept qubits stay in
/// their original order. Qubit 1 is the leftmost ket label (most significant
/// bit of the basis index).
pub fn partial_trace(rho: &DensityMatrix, traced_qubit: usize) -> Result<DensityMatrix> {
    if rho.dim() != 8 {
        return Err(Error::Dimension {
            expected: 8,
            got: rho.dim(),
        });
    }
    if !(1..=3).contains(&traced_qubit) {
        return Err(Error::BadIndex {
            index: traced_qubit,
            limit: 3,
        });
    }
    let shift = 3 - traced_qubit; // bit position of the traced qubit
    let embed = |kept: usize, b: usize| -> usize {
        let hi = kept >> 1;
        let lo = kept & 1;
        match shift {
            2 => (b << 2) | (hi << 1) | lo,
            1 => (hi << 2) | (b << 1) | lo,
            _ => (hi << 2) | (lo << 1) | b,
        }
    };
    let mut out = Matrix::zeros(4, 4);
    for i in 0..4 {
        for j in 0..4 {
            out[(i, j)] =
                rho.entry(embed(i, 0), embed(j, 0)) + rho.entry(embed(i, 1), embed(j, 1));
        }
    }
    DensityMatrix::new(out)
}

/// Wootters concurrence of a real two-qubit density matrix.
///
/// C = max(0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)) with l_i the
/// descending eigenvalues of rho * (sy(x)sy) * rho * (sy(x)sy) (for real rho
/// the complex conjugation in the spin flip is the identity).
///
/// The square roots are computed as |mu_i| with mu_i the eigenvalues of the
/// symmetric matrix sqrt(rho) * (sy(x)sy) * sqrt(rho), which is similar to
/// rho * rho~ squared-rootwise; this keeps full absolute accuracy when the
/// l_i are degenerate or tiny, where a characteristic-polynomial route loses
/// half the significant digits.
pub fn wootters_concurrence(rho: &DensityMatrix) -> Result<f64> {
    if rho.dim() != 4 {
        return Err(Error::Dimension {
            expected: 4,
            got: rho.dim(),
        });
    }
    let dec = eigh_symmetric(rho.matrix())?;
    let mut sqrt_rho = Matrix::zeros(4, 4);
    for (idx, &lam) in dec.values.iter().enumerate() {
        if lam < -1e-9 {
            return Err(Error::InvalidState(format!(
                "eigenvalue {lam:.3e} below -1e-9 in concurrence input"
            )));
        }
        let w = lam.max(0.0).sqrt();
        let v = dec.eigenvector(idx);
        for i in 0..4 {
            for j in 0..4 {
                sqrt_rho[(i, j)] += w * v[i] * v[j];
            }
        }
    }
    let flip = pauli::spin_flip_two_qubit();
    let b = sqrt_rho.mul(&flip).mul(&sqrt_rho).symmetrize();
    let mut mags: Vec<f64> = eigh_symmetric(&b)?.values.iter().map(|m| m.abs()).collect();
    mags.sort_by(|a, b| b.partial_cmp(a).unwrap());
    Ok((mags[0] - mags[1] - mags[2] - mags[3]).clamp(0.0, 1.0))
}
