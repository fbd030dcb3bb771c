//! Dense complex matrices backing the operator algebra at desk scale.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

pub type C64 = num_complex::Complex64;

/// A dense complex square matrix with quantum-operator helpers.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseOperator {
    mat: DMatrix<C64>,
}

impl DenseOperator {
    pub fn from_matrix(mat: DMatrix<C64>) -> Self {
        assert_eq!(mat.nrows(), mat.ncols(), "operators are square");
        DenseOperator { mat }
    }

    pub fn zeros(dim: usize) -> Self {
        DenseOperator { mat: DMatrix::zeros(dim, dim) }
    }

    pub fn identity(dim: usize) -> Self {
        DenseOperator { mat: DMatrix::identity(dim, dim) }
    }

    /// Projector `|v><v|` onto a (not necessarily normalized) vector.
    pub fn outer(v: &DVector<C64>) -> Self {
        DenseOperator { mat: v * v.adjoint() }
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.mat
    }

    pub fn into_matrix(self) -> DMatrix<C64> {
        self.mat
    }

    fn check_dim(&self, other: &DenseOperator) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} vs {}",
                self.dim(),
                other.dim()
            )));
        }
        Ok(())
    }

    pub fn matmul(&self, other: &DenseOperator) -> Result<DenseOperator> {
        self.check_dim(other)?;
        Ok(DenseOperator { mat: &self.mat * &other.mat })
    }

    pub fn add(&self, other: &DenseOperator) -> Result<DenseOperator> {
        self.check_dim(other)?;
        Ok(DenseOperator { mat: &self.mat + &other.mat })
    }

    pub fn sub(&self, other: &DenseOperator) -> Result<DenseOperator> {
        self.check_dim(other)?;
        Ok(DenseOperator { mat: &self.mat - &other.mat })
    }

    pub fn scale(&self, factor: C64) -> DenseOperator {
        DenseOperator { mat: &self.mat * factor }
    }

    pub fn adjoint(&self) -> DenseOperator {
        DenseOperator { mat: self.mat.adjoint() }
    }

    pub fn trace(&self) -> C64 {
        self.mat.diagonal().sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.mat.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs_entry(&self) -> f64 {
        self.mat.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn kron(&self, other: &DenseOperator) -> DenseOperator {
        DenseOperator { mat: self.mat.kronecker(&other.mat) }
    }

    pub fn apply(&self, v: &DVector<C64>) -> DVector<C64> {
        &self.mat * v
    }

    /// `U * self * U^dag`.
    pub fn conjugated(&self, u: &DenseOperator) -> Result<DenseOperator> {
        self.check_dim(u)?;
        Ok(DenseOperator { mat: &u.mat * &self.mat * u.mat.adjoint() })
    }

    /// `U^dag * self * U` (frame change used in symmetrization).
    pub fn conjugated_inv(&self, u: &DenseOperator) -> Result<DenseOperator> {
        self.check_dim(u)?;
        Ok(DenseOperator { mat: u.mat.adjoint() * &self.mat * &u.mat })
    }

    pub fn hermiticity_defect(&self) -> f64 {
        (&self.mat - self.mat.adjoint())
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_defect() <= tol
    }

    pub fn unitarity_defect(&self) -> f64 {
        let d = self.dim();
        (self.mat.adjoint() * &self.mat - DMatrix::<C64>::identity(d, d))
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.unitarity_defect() <= tol
    }

    pub fn approx_eq(&self, other: &DenseOperator, tol: f64) -> bool {
        self.dim() == other.dim()
            && (&self.mat - &other.mat).iter().all(|z| z.norm() <= tol)
    }

    /// Equality up to a global phase, decided by `|tr(A^dag B)| / dim`.
    /// Meaningful for unitaries, where the overlap reaches 1 exactly when
    /// `A = e^{i phi} B`.
    pub fn approx_eq_up_to_phase(&self, other: &DenseOperator, tol: f64) -> bool {
        if self.dim() != other.dim() {
            return false;
        }
        let overlap = (self.mat.adjoint() * &other.mat).diagonal().sum();
        (overlap.norm() / self.dim() as f64 - 1.0).abs() <= tol
    }

    /// The phase `z` with `|z| = 1` best aligning `other` to `self`,
    /// i.e. `self ~ z * other` for phase-equal unitaries.
    pub fn relative_phase(&self, other: &DenseOperator) -> Result<C64> {
        self.check_dim(other)?;
        let overlap = (other.mat.adjoint() * &self.mat).diagonal().sum();
        if overlap.norm() < 1e-14 {
            return Err(Error::InvalidArgument(
                "operators are trace-orthogonal; no relative phase".into(),
            ));
        }
        Ok(overlap / overlap.norm())
    }

    /// Trace out the rightmost tensor factor of dimension `bath_dim`.
    pub fn partial_trace_right(&self, bath_dim: usize) -> Result<DenseOperator> {
        let total = self.dim();
        if bath_dim == 0 || total % bath_dim != 0 {
            return Err(Error::DimensionMismatch(format!(
                "cannot split dim {total} into system x {bath_dim}"
            )));
        }
        let sys = total / bath_dim;
        let mut out = DMatrix::<C64>::zeros(sys, sys);
        for i in 0..sys {
            for j in 0..sys {
                let mut acc = C64::new(0.0, 0.0);
                for b in 0..bath_dim {
                    acc += self.mat[(i * bath_dim + b, j * bath_dim + b)];
                }
                out[(i, j)] = acc;
            }
        }
        Ok(DenseOperator { mat: out })
    }

    /// Eigendecomposition of a Hermitian operator.
    pub fn eigh(&self) -> Result<HermitianEigen> {
        let defect = self.hermiticity_defect();
        if defect > 1e-10 {
            return Err(Error::NotHermitian { defect });
        }
        // symmetrize to scrub roundoff before factorizing
        let sym = (&self.mat + self.mat.adjoint()) * C64::new(0.5, 0.0);
        let eig = sym.symmetric_eigen();
        Ok(HermitianEigen {
            eigenvalues: eig.eigenvalues,
            eigenvectors: eig.eigenvectors,
        })
    }

    /// `exp(-i theta * self)` for Hermitian `self`, by spectral decomposition.
    pub fn exp_herm_scaled(&self, theta: f64) -> Result<DenseOperator> {
        Ok(self.eigh()?.evolution(theta))
    }
}

/// Cached spectral decomposition `H = V diag(lambda) V^dag` of a Hermitian
/// operator; the factor of repeated evolutions.
#[derive(Clone, Debug)]
pub struct HermitianEigen {
    pub eigenvalues: DVector<f64>,
    pub eigenvectors: DMatrix<C64>,
}

impl HermitianEigen {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    /// `exp(-i H t) = V diag(e^{-i lambda t}) V^dag`.
    pub fn evolution(&self, t: f64) -> DenseOperator {
        let phases = DVector::from_iterator(
            self.dim(),
            self.eigenvalues.iter().map(|&l| C64::from_polar(1.0, -l * t)),
        );
        let scaled = {
            let mut m = self.eigenvectors.clone();
            for (k, mut col) in m.column_iter_mut().enumerate() {
                col *= phases[k];
            }
            m
        };
        DenseOperator::from_matrix(scaled * self.eigenvectors.adjoint())
    }

    pub fn reconstruct(&self) -> DenseOperator {
        let scaled = {
            let mut m = self.eigenvectors.clone();
            for (k, mut col) in m.column_iter_mut().enumerate() {
                col *= C64::new(self.eigenvalues[k], 0.0);
            }
            m
        };
        DenseOperator::from_matrix(scaled * self.eigenvectors.adjoint())
    }
}

/// Inner product `<u|v>` with conjugation on the left argument.
pub fn inner(u: &DVector<C64>, v: &DVector<C64>) -> C64 {
    u.dotc(v)
}

/// Euclidean norm of a state vector.
pub fn vector_norm(v: &DVector<C64>) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::PauliString;

    fn pauli_dense(s: &str, n: usize) -> DenseOperator {
        PauliString::parse(s, Some(n)).unwrap().to_dense()
    }

    /// Independent oracle: matrix exponential by scaled Taylor series, no
    /// eigendecomposition involved.
    fn expm_taylor(a: &DMatrix<C64>) -> DMatrix<C64> {
        let n = a.nrows();
        let norm = a.iter().map(|z| z.norm()).fold(0.0, f64::max) * n as f64;
        let squarings = norm.log2().ceil().max(0.0) as u32 + 1;
        let scaled = a / C64::new(2f64.powi(squarings as i32), 0.0);
        let mut result = DMatrix::<C64>::identity(n, n);
        let mut term = DMatrix::<C64>::identity(n, n);
        for k in 1..30 {
            term = &term * &scaled / C64::new(k as f64, 0.0);
            result += &term;
        }
        for _ in 0..squarings {
            result = &result * &result;
        }
        result
    }

    #[test]
    fn evolution_matches_taylor_series_oracle() {
        let h = pauli_dense("X1 Z2", 2)
            .add(&pauli_dense("Y1", 2).scale(C64::new(0.7, 0.0)))
            .unwrap();
        let theta = 0.83;
        let via_eig = h.exp_herm_scaled(theta).unwrap();
        let oracle = expm_taylor(&(h.matrix() * C64::new(0.0, -theta)));
        let diff = (via_eig.matrix() - oracle)
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max);
        assert!(diff < 1e-12, "eig vs taylor mismatch {diff:.3e}");
    }

    #[test]
    fn evolution_is_unitary() {
        let h = pauli_dense("Z1", 3)
            .add(&pauli_dense("X2 X3", 3).scale(C64::new(0.4, 0.0)))
            .unwrap();
        let u = h.exp_herm_scaled(1.3).unwrap();
        assert!(u.unitarity_defect() < 1e-12);
    }

    #[test]
    fn partial_trace_of_product_state() {
        // rho_a (x) rho_b traced over b gives rho_a * tr(rho_b)
        let a = pauli_dense("X1", 1)
            .add(&DenseOperator::identity(2))
            .unwrap()
            .scale(C64::new(0.5, 0.0));
        let b = DenseOperator::identity(2).scale(C64::new(0.5, 0.0));
        let joint = a.kron(&b);
        let back = joint.partial_trace_right(2).unwrap();
        assert!(back.approx_eq(&a, 1e-14));
    }

    #[test]
    fn phase_insensitive_equality() {
        let u = pauli_dense("Z1 Z2", 2);
        let v = u.scale(C64::from_polar(1.0, 1.234));
        assert!(u.approx_eq_up_to_phase(&v, 1e-12));
        assert!(!u.approx_eq(&v, 1e-12));
        let w = pauli_dense("X1", 2);
        assert!(!u.approx_eq_up_to_phase(&w, 1e-12));
    }

    #[test]
    fn eigh_rejects_non_hermitian() {
        let mut m = DMatrix::<C64>::zeros(2, 2);
        m[(0, 1)] = C64::new(1.0, 0.0);
        assert!(DenseOperator::from_matrix(m).eigh().is_err());
    }
}
