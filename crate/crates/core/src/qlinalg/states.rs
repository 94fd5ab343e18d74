//! Quantum states and ±1-valued qubit observables.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use super::matrix::ComplexSquareMatrix;
use crate::error::{Error, Result};
use crate::tol::Tolerances;

/// Pauli axis selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

/// The 2×2 Pauli matrix for an axis.
///
/// Hermitian, traceless, and an involution (σ² = I).
pub fn pauli(axis: Axis) -> ComplexSquareMatrix {
    let c = Complex64::new;
    let entries = match axis {
        Axis::X => [c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)],
        Axis::Y => [c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0)],
        Axis::Z => [c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)],
    };
    ComplexSquareMatrix::from_vec(2, entries.to_vec()).expect("2x2 literal")
}

/// Kronecker product of two single-qubit operators.
///
/// Restricted to 2×2 inputs: the result is the two-qubit operator in the
/// |00⟩, |01⟩, |10⟩, |11⟩ basis.
pub fn tensor(a: &ComplexSquareMatrix, b: &ComplexSquareMatrix) -> Result<ComplexSquareMatrix> {
    if a.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: a.dim(),
        });
    }
    if b.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: b.dim(),
        });
    }
    Ok(a.kron(b))
}

// ── Bloch observables ────────────────────────────────────────────────────────

/// A ±1-valued qubit observable n·σ, defined by a unit Bloch vector n.
///
/// Outcome 0 is the +1 eigenvalue, outcome 1 the −1 eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochObservable {
    bloch: [f64; 3],
}

impl BlochObservable {
    /// Validates the unit-norm invariant.
    pub fn new(bloch: [f64; 3]) -> Result<Self> {
        Self::new_with(bloch, &Tolerances::DEFAULT)
    }

    pub fn new_with(bloch: [f64; 3], tol: &Tolerances) -> Result<Self> {
        let norm = (bloch[0] * bloch[0] + bloch[1] * bloch[1] + bloch[2] * bloch[2]).sqrt();
        if (norm - 1.0).abs() > tol.unit_norm {
            return Err(Error::NotUnitNorm { norm });
        }
        Ok(Self { bloch })
    }

    /// Normalizes an arbitrary nonzero vector onto the Bloch sphere.
    pub fn from_direction(dir: [f64; 3]) -> Result<Self> {
        let norm = (dir[0] * dir[0] + dir[1] * dir[1] + dir[2] * dir[2]).sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::NotUnitNorm { norm });
        }
        Ok(Self {
            bloch: [dir[0] / norm, dir[1] / norm, dir[2] / norm],
        })
    }

    pub fn x() -> Self {
        Self {
            bloch: [1.0, 0.0, 0.0],
        }
    }

    pub fn y() -> Self {
        Self {
            bloch: [0.0, 1.0, 0.0],
        }
    }

    pub fn z() -> Self {
        Self {
            bloch: [0.0, 0.0, 1.0],
        }
    }

    /// Observable in the x–z plane at polar angle θ from +z:
    /// sin(θ) σ_x + cos(θ) σ_z.
    pub fn in_xz_plane(theta: f64) -> Self {
        Self {
            bloch: [theta.sin(), 0.0, theta.cos()],
        }
    }

    pub fn bloch(&self) -> [f64; 3] {
        self.bloch
    }

    /// The operator n_x σ_x + n_y σ_y + n_z σ_z.
    pub fn matrix(&self) -> ComplexSquareMatrix {
        let [nx, ny, nz] = self.bloch;
        let c = Complex64::new;
        ComplexSquareMatrix::from_vec(2, vec![c(nz, 0.0), c(nx, -ny), c(nx, ny), c(-nz, 0.0)])
            .expect("2x2 literal")
    }

    /// Projector onto the outcome eigenspace: (I + (−1)^outcome n·σ)/2.
    ///
    /// Only the low bit of `outcome` is used, so the map is total.
    pub fn projector(&self, outcome: u8) -> ComplexSquareMatrix {
        let sign = if outcome & 1 == 0 { 1.0 } else { -1.0 };
        let obs = self.matrix().scale(sign);
        let half = 0.5;
        let mut out = ComplexSquareMatrix::zeros(2);
        let identity = ComplexSquareMatrix::identity(2);
        for r in 0..2 {
            for c in 0..2 {
                out.set(r, c, (identity.get(r, c) + obs.get(r, c)) * half);
            }
        }
        out
    }
}

// ── Pure states ──────────────────────────────────────────────────────────────

/// A normalized state vector of one or two qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amplitudes: Vec<Complex64>,
}

impl PureState {
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        Self::new_with(amplitudes, &Tolerances::DEFAULT)
    }

    pub fn new_with(amplitudes: Vec<Complex64>, tol: &Tolerances) -> Result<Self> {
        let len = amplitudes.len();
        if len != 2 && len != 4 {
            return Err(Error::DimensionMismatch {
                expected: 4,
                found: len,
            });
        }
        let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > tol.unit_norm {
            return Err(Error::NotUnitNorm { norm });
        }
        Ok(Self { amplitudes })
    }

    /// The singlet (|01⟩ − |10⟩)/√2: perfectly anti-correlated along every axis.
    pub fn singlet() -> Self {
        let s = core::f64::consts::FRAC_1_SQRT_2;
        let c = Complex64::new;
        Self {
            amplitudes: vec![c(0.0, 0.0), c(s, 0.0), c(-s, 0.0), c(0.0, 0.0)],
        }
    }

    /// The Bell state (|00⟩ + |11⟩)/√2.
    pub fn psi_plus() -> Self {
        let s = core::f64::consts::FRAC_1_SQRT_2;
        let c = Complex64::new;
        Self {
            amplitudes: vec![c(s, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(s, 0.0)],
        }
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    /// The rank-1 density matrix |ψ⟩⟨ψ|.
    pub fn density(&self) -> DensityMatrix {
        let n = self.amplitudes.len();
        let mut m = ComplexSquareMatrix::zeros(n);
        for r in 0..n {
            for c in 0..n {
                m.set(r, c, self.amplitudes[r] * self.amplitudes[c].conj());
            }
        }
        DensityMatrix { m }
    }
}

// ── Density matrices ─────────────────────────────────────────────────────────

/// A validated density matrix: Hermitian, unit trace, positive semidefinite.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    m: ComplexSquareMatrix,
}

impl DensityMatrix {
    /// Validates all three invariants against the default tolerances.
    pub fn new(m: ComplexSquareMatrix) -> Result<Self> {
        Self::new_with(m, &Tolerances::DEFAULT)
    }

    pub fn new_with(m: ComplexSquareMatrix, tol: &Tolerances) -> Result<Self> {
        let defect = m.hermiticity_defect();
        if defect > tol.hermiticity {
            return Err(Error::NotHermitian { defect });
        }
        let trace = m.trace();
        if (trace.re - 1.0).abs() > tol.unit_trace || trace.im.abs() > tol.unit_trace {
            return Err(Error::NotUnitTrace { trace: trace.re });
        }
        let eig = m.hermitian_eigen();
        let min = eig.eigenvalues[0];
        if min < -tol.psd_floor {
            return Err(Error::NotPositiveSemidefinite {
                min_eigenvalue: min,
            });
        }
        Ok(Self { m })
    }

    /// Bypasses validation for matrices that are physical by construction.
    pub(crate) fn new_unchecked(m: ComplexSquareMatrix) -> Self {
        debug_assert!(
            m.hermiticity_defect() <= 1e-9 && (m.trace().re - 1.0).abs() <= 1e-9,
            "new_unchecked got an unphysical matrix"
        );
        Self { m }
    }

    /// The maximally mixed state I/dim.
    pub fn maximally_mixed(dim: usize) -> Self {
        Self {
            m: ComplexSquareMatrix::identity(dim).scale(1.0 / dim as f64),
        }
    }

    /// Convex combination `weight`·self + (1−`weight`)·other.
    pub fn mix(&self, other: &DensityMatrix, weight: f64) -> Result<DensityMatrix> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        if !(0.0..=1.0).contains(&weight) {
            return Err(Error::InvalidParameter {
                name: "weight",
                value: weight,
            });
        }
        let m = &self.m.scale(weight) + &other.m.scale(1.0 - weight);
        Ok(DensityMatrix::new_unchecked(m))
    }

    pub fn matrix(&self) -> &ComplexSquareMatrix {
        &self.m
    }

    pub fn into_matrix(self) -> ComplexSquareMatrix {
        self.m
    }

    pub fn dim(&self) -> usize {
        self.m.dim()
    }

    /// Tr ρ², between 1/dim (maximally mixed) and 1 (pure).
    pub fn purity(&self) -> f64 {
        self.m.trace_product(&self.m).re
    }

    /// Eigenvalues, ascending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        self.m.hermitian_eigen().eigenvalues
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for DensityMatrix {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> core::result::Result<S::Ok, S::Error> {
        self.m.serialize(serializer)
    }
}

// ── Fidelity ─────────────────────────────────────────────────────────────────

/// Uhlmann fidelity F(ρ,σ) = (Tr √(√ρ σ √ρ))², in [0, 1].
///
/// Symmetric in its arguments and 1 exactly when ρ = σ. For a pure ρ this
/// reduces to ⟨ψ|σ|ψ⟩.
pub fn fidelity(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    if rho.dim() != sigma.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho.dim(),
            found: sigma.dim(),
        });
    }
    let tol = Tolerances::DEFAULT;
    let sqrt_rho = rho.matrix().sqrt_psd(tol.psd_floor)?;
    let inner = &(&sqrt_rho * sigma.matrix()) * &sqrt_rho;
    let eig = inner.hermitian_eigen();
    let mut tr = 0.0;
    for &l in &eig.eigenvalues {
        // Eigenvalues of √ρ σ √ρ are nonnegative up to rounding.
        tr += l.max(0.0).sqrt();
    }
    Ok((tr * tr).min(1.0))
}

// ── Physicality projection ───────────────────────────────────────────────────

/// The closest (Frobenius norm) unit-trace positive semidefinite matrix to a
/// Hermitian input.
///
/// The non-Hermitian part of the input is discarded first. The eigenvalues are
/// then shifted uniformly onto the trace-one hyperplane and repaired by
/// truncation-and-redistribution: zero the most negative eigenvalue and spread
/// its deficit uniformly over the rest, cascading until all are nonnegative.
/// This is exactly the Euclidean projection of the spectrum onto the
/// probability simplex, so the result is the nearest density matrix. Total on
/// every Hermitian input, and idempotent.
pub fn nearest_density_matrix(m: &ComplexSquareMatrix) -> DensityMatrix {
    let herm = m.hermitian_part();
    let eig = herm.hermitian_eigen();
    let n = eig.eigenvalues.len();

    // Shift onto the trace-1 hyperplane.
    let trace: f64 = eig.eigenvalues.iter().sum();
    let shift = (1.0 - trace) / n as f64;
    let mut vals: Vec<f64> = eig.eigenvalues.iter().map(|&l| l + shift).collect();

    // vals is ascending; zero out from the bottom while redistributing the
    // deficit over the survivors keeps the trace at 1.
    let mut cut = 0usize;
    loop {
        let deficit: f64 = vals[..cut].iter().sum();
        let remaining = (n - cut) as f64;
        let adjust = deficit / remaining;
        if cut == n - 1 || vals[cut] + adjust >= 0.0 {
            for v in vals[..cut].iter_mut() {
                *v = 0.0;
            }
            for v in vals[cut..].iter_mut() {
                *v = (*v + adjust).max(0.0);
            }
            break;
        }
        cut += 1;
    }

    // Exact renormalization absorbs the rounding left by the redistribution.
    let total: f64 = vals.iter().sum();
    if total > 0.0 {
        for v in vals.iter_mut() {
            *v /= total;
        }
    } else {
        // Unreachable after the trace shift, but keep the map total.
        for v in vals.iter_mut() {
            *v = 1.0 / n as f64;
        }
    }

    DensityMatrix::new_unchecked(eig.recompose(&vals))
}
