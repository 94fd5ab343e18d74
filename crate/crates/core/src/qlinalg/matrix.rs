//! Dense complex square matrices with a cyclic-Jacobi Hermitian eigensolver.
//!
//! Everything here is sized for one- and two-qubit operators (2×2 and 4×4).
//! At those dimensions a hand-rolled Jacobi sweep is simpler and more
//! predictable than pulling in a general-purpose solver, and it converges to
//! machine precision in a handful of sweeps.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Index, Mul, Sub};

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};

/// Dense complex square matrix, row-major.
///
/// The derived `PartialEq` is bitwise (useful for determinism checks);
/// mathematical comparisons go through [`approx_eq`](Self::approx_eq) with an
/// explicit absolute tolerance, conventionally
/// [`Tolerances::matrix_eq`](crate::tol::Tolerances).
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSquareMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl ComplexSquareMatrix {
    /// All-zero matrix of dimension `dim`.
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![Complex64::ZERO; dim * dim],
        }
    }

    /// Identity matrix of dimension `dim`.
    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, Complex64::ONE);
        }
        m
    }

    /// Builds a matrix from `dim * dim` row-major entries.
    pub fn from_vec(dim: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                found: data.len(),
            });
        }
        Ok(Self { dim, data })
    }

    /// Diagonal matrix with real entries.
    pub fn from_real_diag(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, Complex64::new(d, 0.0));
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.data[row * self.dim + col] = value;
    }

    /// Row-major view of the entries.
    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Conjugate transpose M†.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.dim);
        for r in 0..self.dim {
            for c in 0..self.dim {
                out.set(r, c, self.get(c, r).conj());
            }
        }
        out
    }

    /// Scales every entry by a real factor.
    pub fn scale(&self, factor: f64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|z| z * factor).collect(),
        }
    }

    /// Kronecker product, `self ⊗ other`.
    ///
    /// Basis order is the usual row-major one: for two qubits the result acts
    /// on |00⟩, |01⟩, |10⟩, |11⟩.
    pub fn kron(&self, other: &Self) -> Self {
        let (n, m) = (self.dim, other.dim);
        let mut out = Self::zeros(n * m);
        for r1 in 0..n {
            for c1 in 0..n {
                let a = self.get(r1, c1);
                for r2 in 0..m {
                    for c2 in 0..m {
                        out.set(r1 * m + r2, c1 * m + c2, a * other.get(r2, c2));
                    }
                }
            }
        }
        out
    }

    /// Largest entrywise absolute difference to `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        debug_assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Entrywise equality within an absolute tolerance.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.dim == other.dim && self.max_abs_diff(other) <= tol
    }

    /// Max |M − M†| over all entries; zero for an exactly Hermitian matrix.
    pub fn hermiticity_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for r in 0..self.dim {
            for c in r..self.dim {
                worst = worst.max((self.get(r, c) - self.get(c, r).conj()).norm());
            }
        }
        worst
    }

    /// The Hermitian part (M + M†)/2.
    pub fn hermitian_part(&self) -> Self {
        let adj = self.adjoint();
        let mut out = Self::zeros(self.dim);
        for r in 0..self.dim {
            for c in 0..self.dim {
                out.set(r, c, (self.get(r, c) + adj.get(r, c)) * 0.5);
            }
        }
        out
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Re Tr(M ρ), with the imaginary part returned alongside so callers can
    /// decide whether it is negligible.
    pub fn trace_product(&self, other: &Self) -> Complex64 {
        debug_assert_eq!(self.dim, other.dim);
        let mut t = Complex64::ZERO;
        for r in 0..self.dim {
            for c in 0..self.dim {
                t += self.get(r, c) * other.get(c, r);
            }
        }
        t
    }

    /// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
    /// rotations.
    ///
    /// The input is symmetrized first, so tiny non-Hermitian noise is
    /// harmless; callers that must reject non-Hermitian input check
    /// [`hermiticity_defect`](Self::hermiticity_defect) themselves.
    /// Eigenvalues come back ascending, with the matching eigenvectors as the
    /// columns of the returned matrix.
    pub fn hermitian_eigen(&self) -> HermitianEigen {
        let n = self.dim;
        let mut a = self.hermitian_part();
        let mut v = Self::identity(n);
        let scale = a.frobenius_norm().max(1.0);

        const MAX_SWEEPS: usize = 60;
        for _ in 0..MAX_SWEEPS {
            let off: f64 = {
                let mut s = 0.0;
                for p in 0..n {
                    for q in (p + 1)..n {
                        s += a.get(p, q).norm_sqr();
                    }
                }
                s.sqrt()
            };
            if off <= 1e-15 * scale {
                break;
            }
            for p in 0..n {
                for q in (p + 1)..n {
                    jacobi_rotate(&mut a, &mut v, p, q);
                }
            }
        }

        let mut pairs: Vec<(f64, usize)> = (0..n).map(|i| (a.get(i, i).re, i)).collect();
        pairs.sort_by(|x, y| x.0.total_cmp(&y.0));

        let eigenvalues: Vec<f64> = pairs.iter().map(|&(val, _)| val).collect();
        let mut eigenvectors = Self::zeros(n);
        for (new_col, &(_, old_col)) in pairs.iter().enumerate() {
            for row in 0..n {
                eigenvectors.set(row, new_col, v.get(row, old_col));
            }
        }
        HermitianEigen {
            eigenvalues,
            eigenvectors,
        }
    }

    /// √M for a positive semidefinite Hermitian matrix.
    ///
    /// Eigenvalues in [−`floor`, 0) are treated as rounded zeros; anything
    /// below −`floor` is a genuine negativity and rejected.
    pub fn sqrt_psd(&self, floor: f64) -> Result<Self> {
        let eig = self.hermitian_eigen();
        let min = eig.eigenvalues[0];
        if min < -floor {
            return Err(Error::NotPositiveSemidefinite {
                min_eigenvalue: min,
            });
        }
        let sqrt_vals: Vec<f64> = eig.eigenvalues.iter().map(|&l| l.max(0.0).sqrt()).collect();
        Ok(eig.recompose(&sqrt_vals))
    }
}

/// Result of a Hermitian eigendecomposition: M = U diag(λ) U†.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    /// Eigenvalues, ascending.
    pub eigenvalues: Vec<f64>,
    /// Unitary whose columns are the eigenvectors, in eigenvalue order.
    pub eigenvectors: ComplexSquareMatrix,
}

impl HermitianEigen {
    /// Rebuilds U diag(vals) U† with the stored eigenvectors and arbitrary
    /// replacement values on the diagonal.
    pub fn recompose(&self, vals: &[f64]) -> ComplexSquareMatrix {
        let n = self.eigenvectors.dim();
        debug_assert_eq!(vals.len(), n);
        let mut out = ComplexSquareMatrix::zeros(n);
        for r in 0..n {
            for c in 0..n {
                let mut z = Complex64::ZERO;
                for (k, &val) in vals.iter().enumerate() {
                    z += self.eigenvectors.get(r, k) * val * self.eigenvectors.get(c, k).conj();
                }
                out.set(r, c, z);
            }
        }
        out
    }
}

/// One complex Jacobi rotation annihilating the (p,q) off-diagonal entry.
///
/// The 2×2 pivot block [[a_pp, a_pq], [a_pq*, a_qq]] is reduced to the real
/// symmetric case by the phase of a_pq, then rotated with the standard
/// symmetric-Schur angle. `a` is updated as J† A J and `v` as V J.
fn jacobi_rotate(a: &mut ComplexSquareMatrix, v: &mut ComplexSquareMatrix, p: usize, q: usize) {
    let apq = a.get(p, q);
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let phase = apq / r; // e^{iα}
    let app = a.get(p, p).re;
    let aqq = a.get(q, q).re;

    let tau = (aqq - app) / (2.0 * r);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    // J columns p,q:  J_pp = c, J_pq = s, J_qp = -s·conj(phase), J_qq = c·conj(phase)
    let jqp = phase.conj() * (-s);
    let jqq = phase.conj() * c;

    let n = a.dim();
    // A ← A J  (columns p and q)
    for k in 0..n {
        let akp = a.get(k, p);
        let akq = a.get(k, q);
        a.set(k, p, akp * c + akq * jqp);
        a.set(k, q, akp * s + akq * jqq);
    }
    // A ← J† A  (rows p and q)
    for k in 0..n {
        let apk = a.get(p, k);
        let aqk = a.get(q, k);
        a.set(p, k, apk * c + aqk * jqp.conj());
        a.set(q, k, apk * s + aqk * jqq.conj());
    }
    // V ← V J
    for k in 0..n {
        let vkp = v.get(k, p);
        let vkq = v.get(k, q);
        v.set(k, p, vkp * c + vkq * jqp);
        v.set(k, q, vkp * s + vkq * jqq);
    }
    // The pivot entry is zero by construction; clear the dust.
    a.set(p, q, Complex64::ZERO);
    a.set(q, p, Complex64::ZERO);
}

/// Serializes as `{"dim": n, "re": [[..]], "im": [[..]]}`: row-major nested
/// arrays of the real and imaginary parts, ready for replotting.
#[cfg(feature = "serde")]
impl serde::Serialize for ComplexSquareMatrix {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> core::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let n = self.dim;
        let part = |im: bool| -> Vec<Vec<f64>> {
            (0..n)
                .map(|r| {
                    (0..n)
                        .map(|c| {
                            let z = self.get(r, c);
                            if im {
                                z.im
                            } else {
                                z.re
                            }
                        })
                        .collect()
                })
                .collect()
        };
        let mut s = serializer.serialize_struct("ComplexSquareMatrix", 3)?;
        s.serialize_field("dim", &n)?;
        s.serialize_field("re", &part(false))?;
        s.serialize_field("im", &part(true))?;
        s.end()
    }
}

impl Index<(usize, usize)> for ComplexSquareMatrix {
    type Output = Complex64;

    fn index(&self, (row, col): (usize, usize)) -> &Complex64 {
        &self.data[row * self.dim + col]
    }
}

impl Add for &ComplexSquareMatrix {
    type Output = ComplexSquareMatrix;

    fn add(self, rhs: Self) -> ComplexSquareMatrix {
        debug_assert_eq!(self.dim, rhs.dim);
        ComplexSquareMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &ComplexSquareMatrix {
    type Output = ComplexSquareMatrix;

    fn sub(self, rhs: Self) -> ComplexSquareMatrix {
        debug_assert_eq!(self.dim, rhs.dim);
        ComplexSquareMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &ComplexSquareMatrix {
    type Output = ComplexSquareMatrix;

    fn mul(self, rhs: Self) -> ComplexSquareMatrix {
        debug_assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut out = ComplexSquareMatrix::zeros(n);
        for r in 0..n {
            for c in 0..n {
                let mut z = Complex64::ZERO;
                for k in 0..n {
                    z += self.get(r, k) * rhs.get(k, c);
                }
                out.set(r, c, z);
            }
        }
        out
    }
}
