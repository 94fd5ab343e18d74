//! The noisy-singlet (Werner) family: direct construction, the one-sided
//! Pauli-twirl mixture used to prepare it experimentally, and violation
//! thresholds of the witnesses in the mixing parameter p.

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::qlinalg::{pauli, tensor, Axis, ComplexSquareMatrix, DensityMatrix, PureState};
use crate::witnesses::{WitnessKind, WitnessSpec};

/// Steering of the noisy singlet is detectable for p > 1/2 in the limit of
/// infinitely many measurement settings. Literature constant, not computed
/// here.
pub const STEERING_THRESHOLD_INFINITE_SETTINGS: f64 = 0.5;

/// Best known Bell-nonlocality threshold for the noisy singlet, obtained with
/// a 465-settings-per-side inequality. Literature constant, not computed
/// here; the region between it and 1/√2 is inconclusive for the inequalities
/// this crate evaluates.
pub const BELL_THRESHOLD_465_SETTINGS: f64 = 0.7056;

/// Mixing parameter of the noisy-singlet family, in [0, 1].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WernerParams {
    p: f64,
}

impl WernerParams {
    pub fn new(p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) || !p.is_finite() {
            return Err(Error::InvalidParameter {
                name: "p",
                value: p,
            });
        }
        Ok(Self { p })
    }

    pub fn p(&self) -> f64 {
        self.p
    }
}

/// ρ(p) = p·|singlet⟩⟨singlet| + (1−p)·I/4.
///
/// Eigenvalues are (1+3p)/4 on the singlet and (1−p)/4 on the three
/// orthogonal Bell states.
pub fn werner_state(params: WernerParams) -> DensityMatrix {
    PureState::singlet()
        .density()
        .mix(&DensityMatrix::maximally_mixed(4), params.p)
        .expect("both 4x4, p validated")
}

// ── Pauli-twirl mixture ──────────────────────────────────────────────────────

/// Weights of the four one-sided Pauli conjugations of |ψ⁺⟩⟨ψ⁺| (with
/// |ψ⁺⟩ = (|00⟩+|11⟩)/√2) that mix to a noisy singlet.
///
/// Slot assignment: `alpha` multiplies the I⊗σ_y conjugation, the one that
/// actually maps |ψ⁺⟩ to the singlet (up to global phase), while `beta`,
/// `gamma`, `delta` multiply the σ_x, identity, and σ_z terms. The printed
/// form of this decomposition attaches the dominant weight to the σ_x term
/// instead; that assignment fails the decomposition identity (σ_x maps |ψ⁺⟩
/// to a triplet, not the singlet), so the library uses the assignment forced
/// by the identity and keeps a regression test against the printed one.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct MixtureWeights {
    /// Weight on the I⊗σ_y conjugation (the singlet-producing one).
    pub alpha: f64,
    /// Weight on the I⊗σ_x conjugation.
    pub beta: f64,
    /// Weight on the identity term (bare |ψ⁺⟩⟨ψ⁺|).
    pub gamma: f64,
    /// Weight on the I⊗σ_z conjugation.
    pub delta: f64,
    /// Whether the weights sum to 1 (within 1e-12).
    pub normalized: bool,
}

impl MixtureWeights {
    pub fn new(alpha: f64, beta: f64, gamma: f64, delta: f64) -> Result<Self> {
        for (name, w) in [
            ("alpha", alpha),
            ("beta", beta),
            ("gamma", gamma),
            ("delta", delta),
        ] {
            if w < 0.0 || !w.is_finite() {
                return Err(Error::InvalidParameter { name, value: w });
            }
        }
        let sum = alpha + beta + gamma + delta;
        Ok(Self {
            alpha,
            beta,
            gamma,
            delta,
            normalized: (sum - 1.0).abs() <= 1e-12,
        })
    }

    pub fn sum(&self) -> f64 {
        self.alpha + self.beta + self.gamma + self.delta
    }

    /// Scales the weights to sum to 1.
    pub fn normalize(&self) -> Result<Self> {
        let sum = self.sum();
        if sum <= 0.0 {
            return Err(Error::UnnormalizedWeights { sum });
        }
        Self::new(
            self.alpha / sum,
            self.beta / sum,
            self.gamma / sum,
            self.delta / sum,
        )
    }
}

/// The twirl weights producing the noisy singlet at mixing parameter p:
/// (1+3p)/4 on the singlet-producing term, (1−p)/4 on each of the others.
pub fn weights_for_p(p: f64) -> Result<MixtureWeights> {
    let params = WernerParams::new(p)?;
    let p = params.p();
    let dominant = (1.0 + 3.0 * p) / 4.0;
    let rest = (1.0 - p) / 4.0;
    MixtureWeights::new(dominant, rest, rest, rest)
}

/// The published integer weight table: for six values of p, twenty repetitions
/// split as `alpha` on the dominant term and `beta` on each of the others
/// (β = γ = δ), so α + 3β = 20. Normalizing any row reproduces
/// [`weights_for_p`] exactly.
pub fn integer_weight_table() -> [(f64, u32, u32); 6] {
    [
        (0.0, 5, 5),
        (0.2, 8, 4),
        (0.4, 11, 3),
        (0.6, 14, 2),
        (0.8, 17, 1),
        (1.0, 20, 0),
    ]
}

/// Statistical mixture of one-sided Pauli conjugations of |ψ⁺⟩⟨ψ⁺|:
/// α (I⊗σ_y)ρ⁺(I⊗σ_y) + β (I⊗σ_x)ρ⁺(I⊗σ_x) + γ ρ⁺ + δ (I⊗σ_z)ρ⁺(I⊗σ_z).
///
/// Requires normalized weights. With the weights of [`weights_for_p`] this
/// reproduces [`werner_state`] to machine precision (the four conjugations
/// are exactly the four Bell-state projectors).
pub fn twirl_mixture_state(weights: &MixtureWeights) -> Result<DensityMatrix> {
    if !weights.normalized {
        return Err(Error::UnnormalizedWeights { sum: weights.sum() });
    }
    let psi_plus = PureState::psi_plus().density();
    let identity = ComplexSquareMatrix::identity(2);
    let conjugation = |axis: Option<Axis>| -> ComplexSquareMatrix {
        let rot = match axis {
            Some(axis) => tensor(&identity, &pauli(axis)).expect("2x2"),
            None => ComplexSquareMatrix::identity(4),
        };
        &(&rot * psi_plus.matrix()) * &rot
    };
    let terms = [
        (weights.alpha, conjugation(Some(Axis::Y))),
        (weights.beta, conjugation(Some(Axis::X))),
        (weights.gamma, conjugation(None)),
        (weights.delta, conjugation(Some(Axis::Z))),
    ];
    let mut m = ComplexSquareMatrix::zeros(4);
    for (w, term) in terms {
        m = &m + &term.scale(w);
    }
    DensityMatrix::new(m)
}

// ── Witness values and thresholds over p ─────────────────────────────────────

/// Witness value on the noisy singlet at mixing parameter p, through the full
/// Born-rule pipeline with canonical settings.
pub fn witness_value_of_p(kind: WitnessKind, n: usize, p: f64) -> Result<f64> {
    let spec = WitnessSpec::canonical(kind, n)?;
    let state = werner_state(WernerParams::new(p)?);
    Ok(spec.evaluate_state(&state)?.value)
}

/// Closed-form witness value on the noisy singlet with canonical settings.
///
/// Entanglement: n(1+p)/2. Steering: n·p. CHSH: 2√2·p. Three-setting Bell:
/// 5p. Every functional is affine in p because the state is.
pub fn closed_form_value(kind: WitnessKind, n: usize, p: f64) -> Result<f64> {
    match (kind, n) {
        (WitnessKind::Entanglement, 2 | 3) => Ok(n as f64 * (1.0 + p) / 2.0),
        (WitnessKind::Steering, 2 | 3) => Ok(n as f64 * p),
        (WitnessKind::Chsh, 2) => Ok(2.0 * core::f64::consts::SQRT_2 * p),
        (WitnessKind::Bell3322, 3) => Ok(5.0 * p),
        (kind, n) => Err(Error::InvalidKindSettings {
            kind: kind.name(),
            n,
        }),
    }
}

/// Smallest mixing parameter at which a canonical witness is violated,
/// localized by bisection to within `tol`.
///
/// Returns `Ok(None)` when no p in [0, 1] violates; that is an answer, not
/// an error. Verifies the affine-and-increasing precondition with a
/// three-point collinearity check before bisecting.
pub fn violation_threshold(kind: WitnessKind, n: usize, tol: f64) -> Result<Option<f64>> {
    let spec = WitnessSpec::canonical(kind, n)?;
    violation_threshold_for_spec(&spec, tol)
}

/// Threshold search for an arbitrary witness scenario; see
/// [`violation_threshold`].
pub fn violation_threshold_for_spec(spec: &WitnessSpec, tol: f64) -> Result<Option<f64>> {
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::InvalidParameter {
            name: "tol",
            value: tol,
        });
    }
    let value_at = |p: f64| -> Result<f64> {
        let state = werner_state(WernerParams::new(p)?);
        Ok(spec.evaluate_state(&state)?.value)
    };

    let f0 = value_at(0.0)?;
    let f_half = value_at(0.5)?;
    let f1 = value_at(1.0)?;
    let collinearity = (f_half - (f0 + f1) / 2.0).abs();
    if collinearity > 1e-9 || f1 <= f0 {
        return Err(Error::InvalidParameter {
            name: "witness value not affine and increasing in p",
            value: collinearity,
        });
    }

    let bound = spec.bound;
    if f1 <= bound {
        return Ok(None);
    }
    if f0 > bound {
        return Ok(Some(0.0));
    }

    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    while hi - lo > tol {
        let mid = (lo + hi) / 2.0;
        if value_at(mid)? > bound {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(Some((lo + hi) / 2.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQRT_2: f64 = core::f64::consts::SQRT_2;

    #[test]
    fn werner_state_endpoints() {
        let pure = werner_state(WernerParams::new(1.0).unwrap());
        assert!((pure.purity() - 1.0).abs() < 1e-12);
        assert!(pure
            .matrix()
            .approx_eq(PureState::singlet().density().matrix(), 1e-12));

        let mixed = werner_state(WernerParams::new(0.0).unwrap());
        assert!((mixed.purity() - 0.25).abs() < 1e-12);
    }

    #[test]
    fn werner_eigenvalues_closed_form() {
        for p in [0.0, 0.3, 0.6, 1.0] {
            let vals = werner_state(WernerParams::new(p).unwrap()).eigenvalues();
            for v in &vals[..3] {
                assert!((v - (1.0 - p) / 4.0).abs() < 1e-12, "p={p}: {vals:?}");
            }
            assert!((vals[3] - (1.0 + 3.0 * p) / 4.0).abs() < 1e-12);
        }
    }

    #[test]
    fn params_validate_range() {
        assert!(WernerParams::new(-0.1).is_err());
        assert!(WernerParams::new(1.1).is_err());
        assert!(WernerParams::new(f64::NAN).is_err());
    }

    #[test]
    fn weights_for_p_endpoints() {
        let w = weights_for_p(1.0).unwrap();
        assert_eq!((w.alpha, w.beta, w.gamma, w.delta), (1.0, 0.0, 0.0, 0.0));
        assert!(w.normalized);

        let w = weights_for_p(0.0).unwrap();
        for x in [w.alpha, w.beta, w.gamma, w.delta] {
            assert!((x - 0.25).abs() < 1e-15);
        }

        let w = weights_for_p(0.6).unwrap();
        assert!((w.alpha - 0.7).abs() < 1e-15);
        assert!((w.beta - 0.1).abs() < 1e-15);
    }

    #[test]
    fn integer_table_matches_weights() {
        for (p, alpha, beta) in integer_weight_table() {
            assert_eq!(alpha + 3 * beta, 20, "row p={p}");
            let row = MixtureWeights::new(alpha as f64, beta as f64, beta as f64, beta as f64)
                .unwrap()
                .normalize()
                .unwrap();
            let expected = weights_for_p(p).unwrap();
            assert!((row.alpha - expected.alpha).abs() < 1e-12, "p={p}");
            assert!((row.beta - expected.beta).abs() < 1e-12);
        }
    }

    #[test]
    fn twirl_decomposition_identity() {
        for p in [0.0, 0.2, 0.4, 0.6, 0.8, 1.0] {
            let direct = werner_state(WernerParams::new(p).unwrap());
            let mixture = twirl_mixture_state(&weights_for_p(p).unwrap()).unwrap();
            let dev = mixture.matrix().max_abs_diff(direct.matrix());
            assert!(dev <= 1e-12, "p={p}: deviation {dev:e}");
        }
    }

    #[test]
    fn twirl_endpoint_terms() {
        // Weight 1 on the identity term leaves |ψ⁺⟩⟨ψ⁺| untouched.
        let w = MixtureWeights::new(0.0, 0.0, 1.0, 0.0).unwrap();
        let rho = twirl_mixture_state(&w).unwrap();
        assert!(rho
            .matrix()
            .approx_eq(PureState::psi_plus().density().matrix(), 1e-12));

        // Uniform weights average the four Bell projectors to I/4.
        let w = MixtureWeights::new(0.25, 0.25, 0.25, 0.25).unwrap();
        let rho = twirl_mixture_state(&w).unwrap();
        assert!(rho
            .matrix()
            .approx_eq(DensityMatrix::maximally_mixed(4).matrix(), 1e-12));
    }

    #[test]
    fn twirl_rejects_unnormalized_weights() {
        let w = MixtureWeights::new(14.0, 2.0, 2.0, 2.0).unwrap();
        assert!(!w.normalized);
        assert!(matches!(
            twirl_mixture_state(&w),
            Err(Error::UnnormalizedWeights { .. })
        ));
        assert!(twirl_mixture_state(&w.normalize().unwrap()).is_ok());
    }

    #[test]
    fn printed_weight_assignment_fails_the_identity() {
        // Putting the dominant weight on the σ_x conjugation (the printed
        // assignment) does not reproduce the noisy singlet: σ_x maps |ψ⁺⟩ to
        // a triplet. This test pins the reassignment down.
        let p = 0.6;
        let swapped = MixtureWeights::new(0.1, 0.7, 0.1, 0.1).unwrap();
        let mixture = twirl_mixture_state(&swapped).unwrap();
        let direct = werner_state(WernerParams::new(p).unwrap());
        let dev = mixture.matrix().max_abs_diff(direct.matrix());
        assert!(
            dev > 0.1,
            "printed assignment unexpectedly matched: {dev:e}"
        );
    }

    #[test]
    fn witness_values_match_closed_forms() {
        let cases = [
            (WitnessKind::Steering, 3, 0.8, 2.4),
            (WitnessKind::Entanglement, 3, 1.0 / 3.0, 2.0),
            (WitnessKind::Chsh, 2, core::f64::consts::FRAC_1_SQRT_2, 2.0),
        ];
        for (kind, n, p, expected) in cases {
            let v = witness_value_of_p(kind, n, p).unwrap();
            assert!((v - expected).abs() < 1e-9, "{kind:?} n={n} p={p}: {v}");
        }
        // And across a grid for every kind.
        for (kind, n) in [
            (WitnessKind::Entanglement, 2),
            (WitnessKind::Entanglement, 3),
            (WitnessKind::Steering, 2),
            (WitnessKind::Steering, 3),
            (WitnessKind::Chsh, 2),
            (WitnessKind::Bell3322, 3),
        ] {
            for k in 0..=10 {
                let p = k as f64 / 10.0;
                let pipeline = witness_value_of_p(kind, n, p).unwrap();
                let closed = closed_form_value(kind, n, p).unwrap();
                assert!(
                    (pipeline - closed).abs() < 1e-9,
                    "{kind:?} n={n} p={p}: {pipeline} vs {closed}"
                );
            }
        }
    }

    #[test]
    fn thresholds_hit_known_values() {
        let tol = 1e-7;
        let cases = [
            (WitnessKind::Entanglement, 3, 1.0 / 3.0, 1e-6),
            (WitnessKind::Entanglement, 2, 0.5, 1e-6),
            (WitnessKind::Steering, 3, 1.0 / 3.0f64.sqrt(), 1e-6),
            (WitnessKind::Steering, 2, 1.0 / SQRT_2, 1e-6),
            (WitnessKind::Chsh, 2, 1.0 / SQRT_2, 1e-6),
            (WitnessKind::Bell3322, 3, 0.8, 1e-4),
        ];
        for (kind, n, expected, accuracy) in cases {
            let t = violation_threshold(kind, n, tol).unwrap().unwrap();
            assert!(
                (t - expected).abs() < accuracy,
                "{kind:?} n={n}: {t} vs {expected}"
            );
        }
    }

    #[test]
    fn threshold_is_cauchy_in_tol() {
        let coarse = violation_threshold(WitnessKind::Steering, 3, 1e-3)
            .unwrap()
            .unwrap();
        let fine = violation_threshold(WitnessKind::Steering, 3, 1e-8)
            .unwrap()
            .unwrap();
        assert!((coarse - fine).abs() < 1e-3);
    }

    #[test]
    fn threshold_ordering_nests() {
        let t = |kind, n| violation_threshold(kind, n, 1e-7).unwrap().unwrap();
        let ent3 = t(WitnessKind::Entanglement, 3);
        let steer3 = t(WitnessKind::Steering, 3);
        let chsh = t(WitnessKind::Chsh, 2);
        assert!(ent3 < steer3 && steer3 < chsh, "{ent3} {steer3} {chsh}");
    }

    #[test]
    fn no_violation_is_reported_as_none() {
        // Same steering scenario but with an unreachable bound.
        let mut spec = WitnessSpec::canonical(WitnessKind::Steering, 3).unwrap();
        spec.bound = 10.0;
        assert_eq!(violation_threshold_for_spec(&spec, 1e-6).unwrap(), None);
    }

    #[test]
    fn threshold_rejects_bad_tol() {
        assert!(violation_threshold(WitnessKind::Chsh, 2, 0.0).is_err());
        assert!(violation_threshold(WitnessKind::Chsh, 2, -1.0).is_err());
    }

    #[test]
    fn steering_equals_folded_anti_corr_identity() {
        // On states whose matched-setting correlators all share one sign, the
        // steering value equals |2·Σ Pd − n|.
        let spec = WitnessSpec::canonical(WitnessKind::Steering, 3).unwrap();
        for p in [0.2, 0.7, 1.0] {
            let state = werner_state(WernerParams::new(p).unwrap());
            let dist =
                crate::correlations::JointDistribution::from_state(&state, &spec.settings).unwrap();
            let value = spec
                .tensor
                .evaluate(&dist, spec.bound, spec.algebraic_max)
                .unwrap()
                .value;
            let pd_sum: f64 = (0..3).map(|i| dist.anti_corr_prob(i).unwrap()).sum();
            assert!((value - (2.0 * pd_sum - 3.0).abs()).abs() < 1e-10, "p={p}");
        }
    }
}
