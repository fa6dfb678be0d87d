//! Dense complex linear algebra for the fixed small dimensions (2, 3, 4)
//! used by the qubit-map machinery: Hermitian eigendecomposition, generator
//! exponentials, Kronecker products and partial traces.

use num_complex::Complex64;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

/// Largest matrix dimension the crate works with (a two-qubit Choi matrix).
pub const MAX_DIM: usize = 4;

/// Absolute entrywise tolerance for accepting a matrix as Hermitian.
pub const HERMITICITY_TOL: f64 = 1e-10;

/// Absolute entrywise tolerance for accepting a matrix as unitary.
pub const UNITARITY_TOL: f64 = 1e-10;

#[derive(Debug, Error)]
pub enum LinalgError {
    #[error("matrix dimension {0} is not supported (expected 2, 3 or 4)")]
    UnsupportedDimension(usize),
    #[error("expected {expected} entries for a {dim}x{dim} matrix, got {got}")]
    EntryCount {
        dim: usize,
        expected: usize,
        got: usize,
    },
    #[error("matrix is not Hermitian: |M[{row}][{col}] - conj(M[{col}][{row}])| = {asymmetry:.3e} exceeds {tol:.1e}")]
    NotHermitian {
        row: usize,
        col: usize,
        asymmetry: f64,
        tol: f64,
    },
    #[error("matrix is not unitary: max |U U† - 1| entry = {deviation:.3e}")]
    NotUnitary { deviation: f64 },
    #[error("dimension mismatch: expected {expected}x{expected}, got {got}x{got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("Kronecker product of dims {left} and {right} exceeds the 4x4 limit")]
    KroneckerTooLarge { left: usize, right: usize },
    #[error("Jacobi eigensolver did not converge (residual off-diagonal {0:.3e})")]
    EigenConvergence(f64),
}

/// A dense square complex matrix of dimension 2, 3 or 4, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Result<Self, LinalgError> {
        check_dim(dim)?;
        Ok(Self {
            dim,
            entries: vec![Complex64::new(0.0, 0.0); dim * dim],
        })
    }

    pub fn identity(dim: usize) -> Result<Self, LinalgError> {
        let mut m = Self::zeros(dim)?;
        for i in 0..dim {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        Ok(m)
    }

    /// Build from a row-major entry list; the length must be `dim * dim`.
    pub fn from_entries(dim: usize, entries: Vec<Complex64>) -> Result<Self, LinalgError> {
        check_dim(dim)?;
        if entries.len() != dim * dim {
            return Err(LinalgError::EntryCount {
                dim,
                expected: dim * dim,
                got: entries.len(),
            });
        }
        Ok(Self { dim, entries })
    }

    /// Build from real row-major entries.
    pub fn from_real(dim: usize, entries: &[f64]) -> Result<Self, LinalgError> {
        Self::from_entries(dim, entries.iter().map(|&r| Complex64::new(r, 0.0)).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn add(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_same_dim(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            dim: self.dim,
            entries,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_same_dim(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self {
            dim: self.dim,
            entries,
        })
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }

    pub fn matmul(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_same_dim(other)?;
        let n = self.dim;
        let mut out = Self::zeros(n)?;
        for i in 0..n {
            for k in 0..n {
                let aik = self.get(i, k);
                if aik == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    let v = out.get(i, j) + aik * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut out = self.clone();
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, self.get(j, i).conj());
            }
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn max_abs_entry(&self) -> f64 {
        self.entries.iter().map(|e| e.norm()).fold(0.0, f64::max)
    }

    /// Largest entrywise deviation from `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim, "max_abs_diff dimension mismatch");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest asymmetry |M[i][j] - conj(M[j][i])| and where it occurs.
    pub fn hermiticity_defect(&self) -> (f64, usize, usize) {
        let mut worst = (0.0_f64, 0, 0);
        for i in 0..self.dim {
            for j in i..self.dim {
                let d = (self.get(i, j) - self.get(j, i).conj()).norm();
                if d > worst.0 {
                    worst = (d, i, j);
                }
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_defect().0 <= tol
    }

    /// (M + M†)/2.
    pub fn symmetrized(&self) -> Self {
        let adj = self.adjoint();
        let entries = self
            .entries
            .iter()
            .zip(&adj.entries)
            .map(|(a, b)| (a + b) * 0.5)
            .collect();
        Self {
            dim: self.dim,
            entries,
        }
    }

    /// Max entry of |U U† - 1|.
    pub fn unitarity_defect(&self) -> f64 {
        let prod = self
            .matmul(&self.adjoint())
            .expect("same-dim product cannot fail");
        let id = Self::identity(self.dim).expect("dim already validated");
        prod.max_abs_diff(&id)
    }

    fn check_same_dim(&self, other: &Self) -> Result<(), LinalgError> {
        if self.dim != other.dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        Ok(())
    }
}

/// Serializes as nested rows of `[re, im]` pairs.
impl Serialize for ComplexMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut rows = serializer.serialize_seq(Some(self.dim))?;
        for i in 0..self.dim {
            let row: Vec<[f64; 2]> = (0..self.dim)
                .map(|j| {
                    let e = self.get(i, j);
                    [e.re, e.im]
                })
                .collect();
            rows.serialize_element(&row)?;
        }
        rows.end()
    }
}

fn check_dim(dim: usize) -> Result<(), LinalgError> {
    if (2..=MAX_DIM).contains(&dim) {
        Ok(())
    } else {
        Err(LinalgError::UnsupportedDimension(dim))
    }
}

/// Real eigenvalues of a Hermitian matrix, sorted ascending.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RealSpectrum {
    values: Vec<f64>,
}

impl RealSpectrum {
    /// Sorts the values ascending.
    pub fn from_unsorted(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| a.partial_cmp(b).expect("eigenvalues are finite"));
        Self { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn min(&self) -> f64 {
        self.values[0]
    }

    pub fn max(&self) -> f64 {
        *self.values.last().expect("spectrum is never empty")
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.abs()).fold(0.0, f64::max)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// 2x2 Pauli matrix σ1.
pub fn sigma_x() -> ComplexMatrix {
    ComplexMatrix::from_real(2, &[0.0, 1.0, 1.0, 0.0]).expect("static entries")
}

/// 2x2 Pauli matrix σ2.
pub fn sigma_y() -> ComplexMatrix {
    ComplexMatrix::from_entries(
        2,
        vec![
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, -1.0),
            Complex64::new(0.0, 1.0),
            Complex64::new(0.0, 0.0),
        ],
    )
    .expect("static entries")
}

/// 2x2 Pauli matrix σ3.
pub fn sigma_z() -> ComplexMatrix {
    ComplexMatrix::from_real(2, &[1.0, 0.0, 0.0, -1.0]).expect("static entries")
}

/// The Pauli matrix σ_k for k in 1..=3.
pub fn sigma(k: usize) -> Option<ComplexMatrix> {
    match k {
        1 => Some(sigma_x()),
        2 => Some(sigma_y()),
        3 => Some(sigma_z()),
        _ => None,
    }
}

fn ensure_hermitian(m: &ComplexMatrix, tol: f64) -> Result<(), LinalgError> {
    let (asymmetry, row, col) = m.hermiticity_defect();
    if asymmetry > tol {
        return Err(LinalgError::NotHermitian {
            row,
            col,
            asymmetry,
            tol,
        });
    }
    Ok(())
}

/// All real eigenvalues of a Hermitian matrix, sorted ascending.
///
/// Rejects inputs whose hermiticity defect exceeds [`HERMITICITY_TOL`]; inputs
/// within the tolerance are symmetrized before solving so roundoff in the
/// caller cannot leak into the spectrum.
pub fn hermitian_eigenvalues(m: &ComplexMatrix) -> Result<RealSpectrum, LinalgError> {
    let (values, _) = hermitian_eigen(m)?;
    Ok(values)
}

/// Eigenvalues (ascending) and matching orthonormal eigenvectors (as columns)
/// of a Hermitian matrix.
pub fn hermitian_eigen(m: &ComplexMatrix) -> Result<(RealSpectrum, ComplexMatrix), LinalgError> {
    ensure_hermitian(m, HERMITICITY_TOL)?;
    let (values, vectors) = jacobi_eigen(&m.symmetrized())?;
    Ok((RealSpectrum::from_unsorted(values), vectors))
}

/// Cyclic complex Jacobi iteration. Returns eigenvalues in the order matching
/// the eigenvector columns, already sorted ascending.
fn jacobi_eigen(m: &ComplexMatrix) -> Result<(Vec<f64>, ComplexMatrix), LinalgError> {
    let n = m.dim();
    let mut a = m.clone();
    let mut v = ComplexMatrix::identity(n).expect("dim already validated");

    let scale = a.max_abs_entry().max(1.0);
    let target = 1e-15 * scale;

    let mut converged = false;
    for _ in 0..100 {
        let mut off_max = 0.0_f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off_max = off_max.max(a.get(p, q).norm());
            }
        }
        if off_max <= target {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    if !converged {
        let mut off_max = 0.0_f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off_max = off_max.max(a.get(p, q).norm());
            }
        }
        if off_max > 1e-9 * scale {
            return Err(LinalgError::EigenConvergence(off_max));
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a.get(i, i)
            .re
            .partial_cmp(&a.get(j, j).re)
            .expect("diagonal is finite")
    });
    let values: Vec<f64> = order.iter().map(|&i| a.get(i, i).re).collect();
    let mut vectors = ComplexMatrix::zeros(n).expect("dim already validated");
    for (new_col, &old_col) in order.iter().enumerate() {
        for row in 0..n {
            vectors.set(row, new_col, v.get(row, old_col));
        }
    }
    Ok((values, vectors))
}

/// One Jacobi rotation zeroing the (p, q) entry of the Hermitian matrix `a`,
/// accumulated into `v`.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a.get(p, q);
    let b = apq.norm();
    if b == 0.0 {
        return;
    }
    let phase = apq / b; // e^{i phi}
    let alpha = a.get(p, p).re;
    let gamma = a.get(q, q).re;

    let theta = 0.5 * (2.0 * b).atan2(alpha - gamma);
    let c = theta.cos();
    let s = theta.sin();

    // J[p][p] = c, J[p][q] = -s, J[q][p] = s e^{-i phi}, J[q][q] = c e^{-i phi}
    let n = a.dim();
    let sp = s * phase.conj();
    let cp = c * phase.conj();

    // A <- A J (column update)
    for i in 0..n {
        let aip = a.get(i, p);
        let aiq = a.get(i, q);
        a.set(i, p, aip * c + aiq * sp);
        a.set(i, q, aip * (-s) + aiq * cp);
    }
    // A <- J† A (row update)
    let sp_row = s * phase;
    let cp_row = c * phase;
    for j in 0..n {
        let apj = a.get(p, j);
        let aqj = a.get(q, j);
        a.set(p, j, apj * c + aqj * sp_row);
        a.set(q, j, apj * (-s) + aqj * cp_row);
    }
    // V <- V J
    for i in 0..n {
        let vip = v.get(i, p);
        let viq = v.get(i, q);
        v.set(i, p, vip * c + viq * sp);
        v.set(i, q, vip * (-s) + viq * cp);
    }

    // Clamp the rotated-away entry and keep the diagonal real.
    a.set(p, q, Complex64::new(0.0, 0.0));
    a.set(q, p, Complex64::new(0.0, 0.0));
    let app = a.get(p, p);
    let aqq = a.get(q, q);
    a.set(p, p, Complex64::new(app.re, 0.0));
    a.set(q, q, Complex64::new(aqq.re, 0.0));
}

/// exp(i · angle · H) for Hermitian H, via eigendecomposition.
///
/// The result is unitary to within roundoff of the eigensolver.
pub fn generator_exponential(h: &ComplexMatrix, angle: f64) -> Result<ComplexMatrix, LinalgError> {
    let (spectrum, vectors) = hermitian_eigen(h)?;
    let n = h.dim();
    // U = V diag(e^{i angle lambda}) V†
    let mut out = ComplexMatrix::zeros(n)?;
    for k in 0..n {
        let phase = Complex64::from_polar(1.0, angle * spectrum.values()[k]);
        for i in 0..n {
            let vik = vectors.get(i, k) * phase;
            for j in 0..n {
                let v = out.get(i, j) + vik * vectors.get(j, k).conj();
                out.set(i, j, v);
            }
        }
    }
    Ok(out)
}

/// Kronecker product A ⊗ B. The result dimension must not exceed 4.
pub fn kronecker(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix, LinalgError> {
    let (na, nb) = (a.dim(), b.dim());
    if na * nb > MAX_DIM {
        return Err(LinalgError::KroneckerTooLarge { left: na, right: nb });
    }
    let n = na * nb;
    let mut out = ComplexMatrix::zeros(n)?;
    for i in 0..na {
        for j in 0..na {
            let aij = a.get(i, j);
            for k in 0..nb {
                for l in 0..nb {
                    out.set(i * nb + k, j * nb + l, aij * b.get(k, l));
                }
            }
        }
    }
    Ok(out)
}

/// Which tensor factor a partial trace removes from a 4x4 (2 ⊗ 2) matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    First,
    Second,
}

/// Trace out one 2-dimensional factor of a 4x4 matrix.
pub fn partial_trace(m: &ComplexMatrix, subsystem: Subsystem) -> Result<ComplexMatrix, LinalgError> {
    if m.dim() != 4 {
        return Err(LinalgError::DimensionMismatch {
            expected: 4,
            got: m.dim(),
        });
    }
    let mut out = ComplexMatrix::zeros(2)?;
    match subsystem {
        Subsystem::First => {
            // result[k][l] = sum_i M[(i,k),(i,l)]
            for k in 0..2 {
                for l in 0..2 {
                    let v = m.get(k, l) + m.get(2 + k, 2 + l);
                    out.set(k, l, v);
                }
            }
        }
        Subsystem::Second => {
            // result[i][j] = sum_k M[(i,k),(j,k)]  (block traces)
            for i in 0..2 {
                for j in 0..2 {
                    let v = m.get(2 * i, 2 * j) + m.get(2 * i + 1, 2 * j + 1);
                    out.set(i, j, v);
                }
            }
        }
    }
    Ok(out)
}

/// Checks unitarity within [`UNITARITY_TOL`] and errors otherwise.
pub fn ensure_unitary(u: &ComplexMatrix) -> Result<(), LinalgError> {
    let deviation = u.unitarity_defect();
    if deviation > UNITARITY_TOL {
        return Err(LinalgError::NotUnitary { deviation });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn diag(values: &[f64]) -> ComplexMatrix {
        let n = values.len();
        let mut m = ComplexMatrix::zeros(n).unwrap();
        for (i, &v) in values.iter().enumerate() {
            m.set(i, i, Complex64::new(v, 0.0));
        }
        m
    }

    fn random_matrix(dim: usize, seed: u64) -> ComplexMatrix {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let entries = (0..dim * dim)
            .map(|_| Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5))
            .collect();
        ComplexMatrix::from_entries(dim, entries).unwrap()
    }

    fn random_hermitian(dim: usize, seed: u64) -> ComplexMatrix {
        random_matrix(dim, seed).symmetrized()
    }

    #[test]
    fn identity_eigenvalues() {
        let spectrum = hermitian_eigenvalues(&ComplexMatrix::identity(4).unwrap()).unwrap();
        assert_eq!(spectrum.values(), &[1.0, 1.0, 1.0, 1.0]);
    }

    #[test]
    fn diagonal_eigenvalues_sorted() {
        let spectrum = hermitian_eigenvalues(&diag(&[1.0, 0.0, 0.0, 0.0])).unwrap();
        assert_eq!(spectrum.values(), &[0.0, 0.0, 0.0, 1.0]);
    }

    #[test]
    fn pauli_choi_closed_form_oracle() {
        // Choi of the Pauli channel x = (0.5, 0.3, 0.1), assembled by hand from
        // its block structure; expected eigenvalues evaluated from the closed
        // form (1 ± x1 ∓ x2 ∓ x3)/2 and sorted.
        let (x1, x2, x3) = (0.5, 0.3, 0.1);
        let m = ComplexMatrix::from_real(
            4,
            &[
                (1.0 + x3) / 2.0, 0.0, 0.0, (x1 + x2) / 2.0,
                0.0, (1.0 - x3) / 2.0, (x1 - x2) / 2.0, 0.0,
                0.0, (x1 - x2) / 2.0, (1.0 - x3) / 2.0, 0.0,
                (x1 + x2) / 2.0, 0.0, 0.0, (1.0 + x3) / 2.0,
            ],
        )
        .unwrap();
        let expected = {
            let mut e = [
                0.5 * (1.0 + x1 - x2 - x3),
                0.5 * (1.0 - x1 + x2 - x3),
                0.5 * (1.0 - x1 - x2 + x3),
                0.5 * (1.0 + x1 + x2 + x3),
            ];
            e.sort_by(|a, b| a.partial_cmp(b).unwrap());
            e
        };
        let spectrum = hermitian_eigenvalues(&m).unwrap();
        for (got, want) in spectrum.values().iter().zip(expected.iter()) {
            assert!((got - want).abs() < 1e-12, "got {got}, want {want}");
        }
    }

    #[test]
    fn rejects_non_hermitian() {
        let mut m = ComplexMatrix::identity(3).unwrap();
        m.set(0, 1, Complex64::new(0.5, 0.0));
        let err = hermitian_eigenvalues(&m).unwrap_err();
        match err {
            LinalgError::NotHermitian { row, col, asymmetry, .. } => {
                assert_eq!((row, col), (0, 1));
                assert!((asymmetry - 0.5).abs() < 1e-15);
            }
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn eigenvectors_diagonalize() {
        for seed in 0..20 {
            for dim in 2..=4 {
                let h = random_hermitian(dim, seed);
                let (spectrum, v) = hermitian_eigen(&h).unwrap();
                // H v_k = lambda_k v_k
                for k in 0..dim {
                    for i in 0..dim {
                        let hv: Complex64 =
                            (0..dim).map(|j| h.get(i, j) * v.get(j, k)).sum();
                        let lv = v.get(i, k) * spectrum.values()[k];
                        assert!(
                            (hv - lv).norm() < 1e-12,
                            "residual {:.3e} at dim {dim} seed {seed}",
                            (hv - lv).norm()
                        );
                    }
                }
                assert!(v.unitarity_defect() < 1e-12);
            }
        }
    }

    #[test]
    fn exponential_zero_angle_is_identity() {
        let h = random_hermitian(4, 7);
        let u = generator_exponential(&h, 0.0).unwrap();
        assert!(u.max_abs_diff(&ComplexMatrix::identity(4).unwrap()) < 1e-14);
    }

    #[test]
    fn exponential_of_sigma_z_at_pi() {
        // exp(i π σ3) = diag(e^{iπ}, e^{-iπ}) = -1
        let u = generator_exponential(&sigma_z(), std::f64::consts::PI).unwrap();
        let minus_one = ComplexMatrix::identity(2).unwrap().scale(Complex64::new(-1.0, 0.0));
        assert!(u.max_abs_diff(&minus_one) < 1e-14);
    }

    #[test]
    fn exponential_of_diagonal_generator() {
        // exp(i (π/2) diag(1,-1,0,0)) = diag(i, -i, 1, 1)
        let lambda3 = diag(&[1.0, -1.0, 0.0, 0.0]);
        let u = generator_exponential(&lambda3, std::f64::consts::FRAC_PI_2).unwrap();
        let expected = ComplexMatrix::from_entries(
            4,
            vec![
                Complex64::new(0.0, 1.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, -1.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(1.0, 0.0),
            ],
        )
        .unwrap();
        assert!(u.max_abs_diff(&expected) < 1e-14);
    }

    #[test]
    fn kronecker_identities() {
        let id2 = ComplexMatrix::identity(2).unwrap();
        let id4 = ComplexMatrix::identity(4).unwrap();
        assert!(kronecker(&id2, &id2).unwrap().max_abs_diff(&id4) < 1e-15);

        // sigma1 ⊗ sigma1 is the 4x4 anti-diagonal of ones
        let xx = kronecker(&sigma_x(), &sigma_x()).unwrap();
        let mut anti = ComplexMatrix::zeros(4).unwrap();
        for i in 0..4 {
            anti.set(i, 3 - i, Complex64::new(1.0, 0.0));
        }
        assert!(xx.max_abs_diff(&anti) < 1e-15);

        // sigma3 ⊗ 1 = diag(1,1,-1,-1)
        let z1 = kronecker(&sigma_z(), &id2).unwrap();
        assert!(z1.max_abs_diff(&diag(&[1.0, 1.0, -1.0, -1.0])) < 1e-15);
    }

    #[test]
    fn kronecker_rejects_large_results() {
        let id2 = ComplexMatrix::identity(2).unwrap();
        let id3 = ComplexMatrix::identity(3).unwrap();
        assert!(matches!(
            kronecker(&id2, &id3),
            Err(LinalgError::KroneckerTooLarge { left: 2, right: 3 })
        ));
    }

    #[test]
    fn partial_trace_of_identity() {
        let id4 = ComplexMatrix::identity(4).unwrap();
        let t = partial_trace(&id4, Subsystem::Second).unwrap();
        let two_id = ComplexMatrix::identity(2).unwrap().scale(Complex64::new(2.0, 0.0));
        assert!(t.max_abs_diff(&two_id) < 1e-15);
        let t = partial_trace(&id4, Subsystem::First).unwrap();
        assert!(t.max_abs_diff(&two_id) < 1e-15);
    }

    #[test]
    fn partial_trace_rejects_wrong_dim() {
        let id2 = ComplexMatrix::identity(2).unwrap();
        assert!(matches!(
            partial_trace(&id2, Subsystem::First),
            Err(LinalgError::DimensionMismatch { expected: 4, got: 2 })
        ));
    }

    proptest! {
        #[test]
        fn eigenvalue_sum_matches_trace(seed in 0u64..500) {
            let h = random_hermitian(4, seed);
            let spectrum = hermitian_eigenvalues(&h).unwrap();
            let sum: f64 = spectrum.values().iter().sum();
            prop_assert!((sum - h.trace().re).abs() < 1e-10);
        }

        #[test]
        fn exponential_inverse_pairs(seed in 0u64..200, angle in -6.0f64..6.0) {
            let h = random_hermitian(4, seed);
            let u = generator_exponential(&h, angle).unwrap();
            let u_inv = generator_exponential(&h, -angle).unwrap();
            let prod = u.matmul(&u_inv).unwrap();
            prop_assert!(prod.max_abs_diff(&ComplexMatrix::identity(4).unwrap()) < 1e-10);
            prop_assert!(u.unitarity_defect() < 1e-10);
        }

        #[test]
        fn partial_trace_of_kronecker(seed_a in 0u64..200, seed_b in 1000u64..1200) {
            let a = random_matrix(2, seed_a);
            let b = random_matrix(2, seed_b);
            let ab = kronecker(&a, &b).unwrap();
            // tracing out the second factor leaves tr(B) * A
            let reduced = partial_trace(&ab, Subsystem::Second).unwrap();
            let expected = a.scale(b.trace());
            prop_assert!(reduced.max_abs_diff(&expected) < 1e-12);
            // and the first factor leaves tr(A) * B
            let reduced = partial_trace(&ab, Subsystem::First).unwrap();
            let expected = b.scale(a.trace());
            prop_assert!(reduced.max_abs_diff(&expected) < 1e-12);
        }
    }
}
