//! Local-uncertainty witnesses: one weight tensor family, four conditions.
//!
//! A witness assigns a weight V(a,b|i,j) to every measurement event and sums
//! them against the joint distribution, F = Σ V·P. Each built-in condition
//! certifies one class of nonlocal correlation when F exceeds its classical
//! bound:
//!
//! * entanglement — counts anti-correlated outcomes of matched settings,
//! * steering — sums |⟨A_i B_i⟩| over matched settings,
//! * Bell-CHSH — the two-setting correlation game, no communication,
//! * Bell 3-setting — a three-setting inequality with marginal terms,
//!   inequivalent to CHSH.
//!
//! The degree of nonlocality is measured by the binary Shannon entropy of the
//! functional value normalized to its algebraic maximum.

use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::correlations::{JointDistribution, SettingPair};
use crate::error::{Error, Result};
use crate::qlinalg::{BlochObservable, DensityMatrix};
use crate::tol::Tolerances;

/// The classical bound of the two-setting entanglement witness as computed by
/// product-state maximization.
///
/// The commonly quoted constant for this bound is 1, but direct maximization
/// of Σ Pd over product states yields 3/2 (see `bounds`), and 3/2 is the value
/// consistent with the mixing-parameter threshold p > 1/2 of the noisy-singlet
/// family. The library therefore uses 3/2 and carries the published constant
/// as [`ENTANGLEMENT_BOUND_N2_PUBLISHED`] for reporting.
pub const ENTANGLEMENT_BOUND_N2: f64 = 1.5;

/// The published two-setting entanglement bound, kept only for reporting the
/// discrepancy with [`ENTANGLEMENT_BOUND_N2`].
pub const ENTANGLEMENT_BOUND_N2_PUBLISHED: f64 = 1.0;

/// Classical bound of the three-setting entanglement witness.
pub const ENTANGLEMENT_BOUND_N3: f64 = 2.0;

/// Classical (local-hidden-state) bound of the two-setting steering witness.
pub const STEERING_BOUND_N2: f64 = core::f64::consts::SQRT_2;

/// Classical (local-hidden-state) bound of the three-setting steering witness,
/// √3, attained by Bloch vectors along (±1,±1,±1)/√3.
pub const STEERING_BOUND_N3: f64 = 1.732_050_807_568_877_2;

/// Local bound of the CHSH game.
pub const CHSH_BOUND: f64 = 2.0;

/// Local bound of the three-setting Bell inequality.
pub const BELL3322_BOUND: f64 = 4.0;

/// Which condition a weight tensor encodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize),
    serde(rename_all = "lowercase")
)]
pub enum WitnessKind {
    Entanglement,
    Steering,
    Chsh,
    Bell3322,
    Custom,
}

impl WitnessKind {
    pub fn name(&self) -> &'static str {
        match self {
            WitnessKind::Entanglement => "entanglement",
            WitnessKind::Steering => "steering",
            WitnessKind::Chsh => "chsh",
            WitnessKind::Bell3322 => "bell3322",
            WitnessKind::Custom => "custom",
        }
    }
}

/// The weight tensor V(a,b|i,j) together with its kind and the classical
/// communication cost (in cbits) of the scenario it belongs to.
///
/// Tensors are plain linear objects; the absolute-value rules of the steering
/// and CHSH conditions are applied at evaluation time by kind, so the same
/// tensor feeds both [`evaluate`](Self::evaluate) and the
/// deterministic-strategy enumerator in `bounds`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConditionTensor {
    n: usize,
    v: Vec<f64>,
    kind: WitnessKind,
    cbits: f64,
}

impl ConditionTensor {
    /// Entanglement condition: weight 1 on anti-correlated outcomes of
    /// matched settings, V(a,b|i,i) = 1 for a = b⊕1.
    ///
    /// The functional is a plain sum of anti-correlation probabilities with an
    /// upper-bound inequality, so all surviving weights are +1. Bob reveals
    /// his setting and outcome, which costs log2(2n) cbits.
    pub fn entanglement(n: usize) -> Result<Self> {
        check_supported_n(n)?;
        let mut v = vec![0.0; n * n * 4];
        for i in 0..n {
            v[idx(n, i, i, 0, 1)] = 1.0;
            v[idx(n, i, i, 1, 0)] = 1.0;
        }
        Ok(Self {
            n,
            v,
            kind: WitnessKind::Entanglement,
            cbits: (2.0 * n as f64).log2(),
        })
    }

    /// Steering condition: V(a,b|i,j) = (−1)^{a+b} δ_ij.
    ///
    /// Evaluation takes the absolute value per setting, giving Σ_i |⟨A_iB_i⟩|.
    /// Bob reveals only his setting choice, log2(n) cbits.
    pub fn steering(n: usize) -> Result<Self> {
        check_supported_n(n)?;
        let mut v = vec![0.0; n * n * 4];
        for i in 0..n {
            for a in 0..2usize {
                for b in 0..2usize {
                    v[idx(n, i, i, a, b)] = parity_sign(a + b);
                }
            }
        }
        Ok(Self {
            n,
            v,
            kind: WitnessKind::Steering,
            cbits: (n as f64).log2(),
        })
    }

    /// CHSH condition: V(a,b|i,j) = (−1)^{a+b+ij}, the winning condition of
    /// the CHSH game. No communication from Bob, 0 cbits.
    pub fn chsh() -> Self {
        let n = 2;
        let mut v = vec![0.0; n * n * 4];
        for i in 0..n {
            for j in 0..n {
                for a in 0..2usize {
                    for b in 0..2usize {
                        v[idx(n, i, j, a, b)] = parity_sign(a + b + i * j);
                    }
                }
            }
        }
        Self {
            n,
            v,
            kind: WitnessKind::Chsh,
            cbits: 0.0,
        }
    }

    /// Three-setting Bell condition, correlator coefficients
    ///
    /// ```text
    ///       ⟨A_iB_j⟩:  [ 1  1  1 ]      marginals:  +⟨A_0⟩ +⟨A_1⟩
    ///                  [ 1  1 -1 ]                  −⟨B_0⟩ −⟨B_1⟩
    ///                  [ 1 -1  0 ]
    /// ```
    ///
    /// with local bound 4. The marginal terms are folded into the tensor by
    /// spreading each over the partner party's settings with weight 1/n, so
    /// that the plain double sum Σ V·P reproduces correlators plus marginals
    /// exactly on every no-signalling distribution (quantum states and
    /// deterministic strategies alike) and one generic evaluator covers all
    /// conditions.
    pub fn bell3322() -> Self {
        let n = 3;
        let corr = BELL3322_CORRELATORS;
        let marg_a = BELL3322_ALICE_MARGINALS;
        let marg_b = BELL3322_BOB_MARGINALS;
        let mut v = vec![0.0; n * n * 4];
        for i in 0..n {
            for j in 0..n {
                for a in 0..2usize {
                    for b in 0..2usize {
                        v[idx(n, i, j, a, b)] = corr[i][j] * parity_sign(a + b)
                            + marg_a[i] / n as f64 * parity_sign(a)
                            + marg_b[j] / n as f64 * parity_sign(b);
                    }
                }
            }
        }
        Self {
            n,
            v,
            kind: WitnessKind::Bell3322,
            cbits: 0.0,
        }
    }

    /// A user-supplied tensor with `[i][j][a][b]` layout.
    pub fn custom(n: usize, values: Vec<f64>, cbits: f64) -> Result<Self> {
        if values.len() != n * n * 4 {
            return Err(Error::DimensionMismatch {
                expected: n * n * 4,
                found: values.len(),
            });
        }
        if values.iter().any(|x| !x.is_finite()) || !cbits.is_finite() || cbits < 0.0 {
            return Err(Error::InvalidParameter {
                name: "tensor entries / cbits",
                value: cbits,
            });
        }
        Ok(Self {
            n,
            v: values,
            kind: WitnessKind::Custom,
            cbits,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> WitnessKind {
        self.kind
    }

    /// Classical communication cost of the scenario, in cbits.
    pub fn cbits(&self) -> f64 {
        self.cbits
    }

    /// V(a,b|i,j).
    pub fn value_at(&self, i: usize, j: usize, a: usize, b: usize) -> f64 {
        assert!(i < self.n && j < self.n && a < 2 && b < 2);
        self.v[idx(self.n, i, j, a, b)]
    }

    /// Algebraic maximum of Σ V·P over all per-block-normalized tables:
    /// Σ_{i,j} max_{a,b} V(a,b|i,j).
    ///
    /// For the built-in conditions this reproduces the usual values n
    /// (entanglement, steering) and 4 (CHSH).
    pub fn algebraic_max(&self) -> f64 {
        let mut total = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                let block_max = (0..4)
                    .map(|k| self.v[(i * self.n + j) * 4 + k])
                    .fold(f64::NEG_INFINITY, f64::max);
                total += block_max;
            }
        }
        total
    }

    /// Evaluates the witness on a distribution.
    ///
    /// The base value is Σ V·P. By kind, the steering condition takes the
    /// absolute value per matched setting (Σ_i |⟨A_iB_i⟩|) and CHSH takes the
    /// absolute value of the total; all other kinds report the signed sum.
    pub fn evaluate(
        &self,
        dist: &JointDistribution,
        bound: f64,
        algebraic_max: f64,
    ) -> Result<WitnessResult> {
        self.evaluate_with(dist, bound, algebraic_max, &Tolerances::DEFAULT)
    }

    pub fn evaluate_with(
        &self,
        dist: &JointDistribution,
        bound: f64,
        algebraic_max: f64,
        tol: &Tolerances,
    ) -> Result<WitnessResult> {
        if dist.n() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: dist.n(),
            });
        }
        let value = match self.kind {
            WitnessKind::Steering => {
                let mut total = 0.0;
                for i in 0..self.n {
                    let mut s = 0.0;
                    for a in 0..2usize {
                        for b in 0..2usize {
                            s += self.v[idx(self.n, i, i, a, b)] * dist.prob(i, i, a, b);
                        }
                    }
                    total += s.abs();
                }
                total
            }
            WitnessKind::Chsh => self.linear_value(dist).abs(),
            _ => self.linear_value(dist),
        };
        let (normalized, entropy) = entropy_degree(value, algebraic_max)?;
        Ok(WitnessResult {
            kind: self.kind,
            n: self.n,
            value,
            bound,
            violated: value > bound + tol.violation,
            normalized,
            entropy,
            algebraic_max,
        })
    }

    /// The plain signed sum Σ V·P with no kind-specific absolute values.
    pub fn linear_value(&self, dist: &JointDistribution) -> f64 {
        let mut total = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                for a in 0..2usize {
                    for b in 0..2usize {
                        total += self.v[idx(self.n, i, j, a, b)] * dist.prob(i, j, a, b);
                    }
                }
            }
        }
        total
    }
}

/// Correlator coefficients of the three-setting Bell inequality, `[i][j]`.
pub const BELL3322_CORRELATORS: [[f64; 3]; 3] =
    [[1.0, 1.0, 1.0], [1.0, 1.0, -1.0], [1.0, -1.0, 0.0]];

/// Alice marginal coefficients of the three-setting Bell inequality.
pub const BELL3322_ALICE_MARGINALS: [f64; 3] = [1.0, 1.0, 0.0];

/// Bob marginal coefficients of the three-setting Bell inequality.
pub const BELL3322_BOB_MARGINALS: [f64; 3] = [-1.0, -1.0, 0.0];

/// Outcome of evaluating a witness: the functional value against its
/// classical bound, plus the normalized value and its Shannon entropy.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct WitnessResult {
    pub kind: WitnessKind,
    pub n: usize,
    /// Functional value F (kind-specific absolute values applied).
    pub value: f64,
    /// Classical bound C.
    pub bound: f64,
    /// Whether F exceeds C beyond tolerance.
    pub violated: bool,
    /// F normalized to the algebraic maximum, in [0, 1].
    pub normalized: f64,
    /// Binary Shannon entropy of the normalized value, in [0, 1].
    pub entropy: f64,
    pub algebraic_max: f64,
}

/// Normalized functional value and its binary Shannon entropy.
///
/// The entropy uses the 0·log 0 = 0 convention, so H(0) = H(1) = 0.
pub fn entropy_degree(value: f64, algebraic_max: f64) -> Result<(f64, f64)> {
    if algebraic_max <= 0.0 {
        return Err(Error::InvalidParameter {
            name: "algebraic_max",
            value: algebraic_max,
        });
    }
    let normalized = value.abs() / algebraic_max;
    if normalized > 1.0 + 1e-9 {
        return Err(Error::InvalidParameter {
            name: "value",
            value,
        });
    }
    let normalized = normalized.min(1.0);
    Ok((normalized, binary_entropy(normalized)))
}

/// H(p) = −p log2 p − (1−p) log2 (1−p), with H(0) = H(1) = 0.
pub fn binary_entropy(p: f64) -> f64 {
    let term = |x: f64| if x > 0.0 { -x * x.log2() } else { 0.0 };
    term(p) + term(1.0 - p)
}

// ── Canonical scenarios ──────────────────────────────────────────────────────

/// A complete witness scenario: the tensor, the measurement settings it is
/// evaluated with, and both reference values of the inequality.
#[derive(Debug, Clone, PartialEq)]
pub struct WitnessSpec {
    pub tensor: ConditionTensor,
    pub settings: SettingPair,
    pub bound: f64,
    pub algebraic_max: f64,
}

impl WitnessSpec {
    /// The canonical scenario for a built-in kind.
    ///
    /// Settings: entanglement and steering use the Pauli axes ({x,z} for
    /// n = 2, {x,y,z} for n = 3) on both sides; CHSH uses A = {z, x} against
    /// B = {(z±x)/√2}; the three-setting Bell inequality uses Bob observables
    /// in the x–z plane at 0, π/3, 2π/3 with Alice settings at the see-saw
    /// optimum for the noisy-singlet family (anti-aligned with each row's
    /// Bob-vector sum).
    pub fn canonical(kind: WitnessKind, n: usize) -> Result<Self> {
        let tensor = match kind {
            WitnessKind::Entanglement => ConditionTensor::entanglement(n)?,
            WitnessKind::Steering => ConditionTensor::steering(n)?,
            WitnessKind::Chsh => {
                if n != 2 {
                    return Err(Error::InvalidKindSettings { kind: "chsh", n });
                }
                ConditionTensor::chsh()
            }
            WitnessKind::Bell3322 => {
                if n != 3 {
                    return Err(Error::InvalidKindSettings {
                        kind: "bell3322",
                        n,
                    });
                }
                ConditionTensor::bell3322()
            }
            WitnessKind::Custom => return Err(Error::InvalidKindSettings { kind: "custom", n }),
        };
        let settings = canonical_settings(kind, n)?;
        let bound = classical_bound(kind, n)?;
        let algebraic_max = tensor.algebraic_max();
        Ok(Self {
            tensor,
            settings,
            bound,
            algebraic_max,
        })
    }

    pub fn kind(&self) -> WitnessKind {
        self.tensor.kind()
    }

    pub fn n(&self) -> usize {
        self.tensor.n()
    }

    /// Born-rule distribution of `state` under the canonical settings, then
    /// witness evaluation.
    pub fn evaluate_state(&self, state: &DensityMatrix) -> Result<WitnessResult> {
        let dist = JointDistribution::from_state(state, &self.settings)?;
        self.tensor.evaluate(&dist, self.bound, self.algebraic_max)
    }
}

/// Canonical measurement settings per kind; see [`WitnessSpec::canonical`].
pub fn canonical_settings(kind: WitnessKind, n: usize) -> Result<SettingPair> {
    match kind {
        WitnessKind::Entanglement | WitnessKind::Steering => {
            let axes = match n {
                2 => vec![BlochObservable::x(), BlochObservable::z()],
                3 => vec![
                    BlochObservable::x(),
                    BlochObservable::y(),
                    BlochObservable::z(),
                ],
                _ => {
                    return Err(Error::UnsupportedSettingCount {
                        n,
                        supported: "2 or 3",
                    })
                }
            };
            SettingPair::same_both_sides(axes)
        }
        WitnessKind::Chsh => {
            if n != 2 {
                return Err(Error::InvalidKindSettings { kind: "chsh", n });
            }
            let s = core::f64::consts::FRAC_1_SQRT_2;
            SettingPair::new(
                vec![BlochObservable::z(), BlochObservable::x()],
                vec![
                    BlochObservable::new([s, 0.0, s])?,
                    BlochObservable::new([-s, 0.0, s])?,
                ],
            )
        }
        WitnessKind::Bell3322 => {
            if n != 3 {
                return Err(Error::InvalidKindSettings {
                    kind: "bell3322",
                    n,
                });
            }
            let third = core::f64::consts::FRAC_PI_3;
            let bob: Vec<BlochObservable> = (0..3)
                .map(|j| BlochObservable::in_xz_plane(j as f64 * third))
                .collect();
            // Alice observables anti-aligned with each correlator row's
            // Bob-vector sum: the see-saw fixed point for any state whose
            // correlation matrix is a negative multiple of the identity.
            let alice: Vec<BlochObservable> = (0..3)
                .map(|i| {
                    let mut dir = [0.0f64; 3];
                    for (j, b) in bob.iter().enumerate() {
                        let bb = b.bloch();
                        for k in 0..3 {
                            dir[k] -= BELL3322_CORRELATORS[i][j] * bb[k];
                        }
                    }
                    BlochObservable::from_direction(dir)
                })
                .collect::<Result<_>>()?;
            SettingPair::new(alice, bob)
        }
        WitnessKind::Custom => Err(Error::InvalidKindSettings { kind: "custom", n }),
    }
}

/// The pinned classical bound C for a built-in kind.
///
/// These constants are recomputed from first principles by the `bounds`
/// module; the acceptance tests verify the two agree.
pub fn classical_bound(kind: WitnessKind, n: usize) -> Result<f64> {
    match (kind, n) {
        (WitnessKind::Entanglement, 2) => Ok(ENTANGLEMENT_BOUND_N2),
        (WitnessKind::Entanglement, 3) => Ok(ENTANGLEMENT_BOUND_N3),
        (WitnessKind::Steering, 2) => Ok(STEERING_BOUND_N2),
        (WitnessKind::Steering, 3) => Ok(STEERING_BOUND_N3),
        (WitnessKind::Chsh, 2) => Ok(CHSH_BOUND),
        (WitnessKind::Bell3322, 3) => Ok(BELL3322_BOUND),
        (kind, n) => Err(Error::InvalidKindSettings {
            kind: kind.name(),
            n,
        }),
    }
}

fn check_supported_n(n: usize) -> Result<()> {
    if n == 2 || n == 3 {
        Ok(())
    } else {
        Err(Error::UnsupportedSettingCount {
            n,
            supported: "2 or 3",
        })
    }
}

#[inline]
fn idx(n: usize, i: usize, j: usize, a: usize, b: usize) -> usize {
    ((i * n + j) * 2 + a) * 2 + b
}

#[inline]
fn parity_sign(k: usize) -> f64 {
    if k.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}
