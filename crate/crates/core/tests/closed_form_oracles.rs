//! Independent closed-form oracles for the optimizers and the fidelity.
//!
//! The see-saw maxima of the built-in witnesses have exact expressions in the
//! singular values of the state's 3×3 correlation matrix T:
//!
//! * CHSH:         2·√(σ₁² + σ₂²)          (two largest singular values)
//! * steering:     n·σ₁                     (each matched pair aligns freely)
//! * entanglement: n·(1 + σ₁)/2
//!
//! None of these formulas appear in the implementation, which works on the
//! weight tensors directly; agreement on asymmetric random states is strong
//! evidence the alternating search finds the global optimum.

use lur_core::bounds::quantum_maximum_seesaw;
use lur_core::qlinalg::{fidelity, pauli, tensor, Axis, ComplexSquareMatrix, DensityMatrix};
use lur_core::witnesses::WitnessKind;
use num_complex::Complex64;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

fn random_state(rng: &mut ChaCha8Rng, dim: usize) -> DensityMatrix {
    loop {
        let mut g = ComplexSquareMatrix::zeros(dim);
        for r in 0..dim {
            for c in 0..dim {
                let re: f64 = rng.sample(StandardNormal);
                let im: f64 = rng.sample(StandardNormal);
                g.set(r, c, Complex64::new(re, im));
            }
        }
        let gram = &g * &g.adjoint();
        let trace = gram.trace().re;
        if trace > 1e-6 {
            if let Ok(state) = DensityMatrix::new(gram.scale(1.0 / trace)) {
                return state;
            }
        }
    }
}

/// Singular values of the correlation matrix T_kl = Tr[ρ (σ_k ⊗ σ_l)],
/// descending, via the eigenvalues of TᵀT.
fn correlation_singular_values(state: &DensityMatrix) -> [f64; 3] {
    let sig = [pauli(Axis::X), pauli(Axis::Y), pauli(Axis::Z)];
    let mut t = [[0.0f64; 3]; 3];
    for k in 0..3 {
        for l in 0..3 {
            t[k][l] = tensor(&sig[k], &sig[l])
                .unwrap()
                .trace_product(state.matrix())
                .re;
        }
    }
    let mut gram = ComplexSquareMatrix::zeros(3);
    for r in 0..3 {
        for c in 0..3 {
            let s: f64 = t.iter().map(|row| row[r] * row[c]).sum();
            gram.set(r, c, Complex64::new(s, 0.0));
        }
    }
    let eig = gram.hermitian_eigen(); // ascending
    [
        eig.eigenvalues[2].max(0.0).sqrt(),
        eig.eigenvalues[1].max(0.0).sqrt(),
        eig.eigenvalues[0].max(0.0).sqrt(),
    ]
}

#[test]
fn seesaw_chsh_matches_two_singular_value_formula() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for case in 0..6 {
        let state = random_state(&mut rng, 4);
        let [s1, s2, _] = correlation_singular_values(&state);
        let oracle = 2.0 * (s1 * s1 + s2 * s2).sqrt();
        let report = quantum_maximum_seesaw(WitnessKind::Chsh, &state, 2, 202).unwrap();
        assert!(
            (report.bound - oracle).abs() < 1e-6,
            "case {case}: seesaw {} vs oracle {oracle}",
            report.bound
        );
    }
}

#[test]
fn seesaw_steering_matches_top_singular_value() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for case in 0..6 {
        let state = random_state(&mut rng, 4);
        let [s1, _, _] = correlation_singular_values(&state);
        for n in [2usize, 3] {
            let oracle = n as f64 * s1;
            let report = quantum_maximum_seesaw(WitnessKind::Steering, &state, n, 303).unwrap();
            assert!(
                (report.bound - oracle).abs() < 1e-6,
                "case {case} n={n}: seesaw {} vs oracle {oracle}",
                report.bound
            );
        }
    }
}

#[test]
fn seesaw_entanglement_matches_singular_value_formula() {
    let mut rng = ChaCha8Rng::seed_from_u64(1234);
    for case in 0..6 {
        let state = random_state(&mut rng, 4);
        let [s1, _, _] = correlation_singular_values(&state);
        let oracle = 3.0 * (1.0 + s1) / 2.0;
        let report = quantum_maximum_seesaw(WitnessKind::Entanglement, &state, 3, 404).unwrap();
        assert!(
            (report.bound - oracle).abs() < 1e-6,
            "case {case}: seesaw {} vs oracle {oracle}",
            report.bound
        );
    }
}

#[test]
fn seesaw_bell3322_scales_on_noisy_singlets() {
    // Zero-marginal family: the three-setting Bell maximum is 5p.
    for p in [0.6, 1.0] {
        let state = lur_core::werner::werner_state(lur_core::werner::WernerParams::new(p).unwrap());
        let report = quantum_maximum_seesaw(WitnessKind::Bell3322, &state, 3, 55).unwrap();
        assert!(
            (report.bound - 5.0 * p).abs() < 1e-6,
            "p={p}: {}",
            report.bound
        );
    }
}

#[test]
fn seesaw_bell3322_on_a_product_state_hits_the_local_bound() {
    // |00⟩⟨00| has nonzero local Bloch vectors, so this exercises the
    // marginal terms of the see-saw gradient. The functional on a product
    // state is multilinear in the Bloch vectors, so its maximum sits at a
    // deterministic vertex: exactly the enumeration bound 4.
    let zero = lur_core::qlinalg::PureState::new(vec![
        Complex64::new(1.0, 0.0),
        Complex64::ZERO,
        Complex64::ZERO,
        Complex64::ZERO,
    ])
    .unwrap()
    .density();
    let report = quantum_maximum_seesaw(WitnessKind::Bell3322, &zero, 3, 89).unwrap();
    assert!((report.bound - 4.0).abs() < 1e-6, "bound {}", report.bound);
}

#[test]
fn qubit_fidelity_matches_determinant_closed_form() {
    // For single qubits F(ρ,σ) = Tr(ρσ) + 2√(det ρ · det σ), which never
    // touches the matrix square roots the implementation uses.
    let det2 = |m: &ComplexSquareMatrix| -> f64 {
        (m.get(0, 0) * m.get(1, 1) - m.get(0, 1) * m.get(1, 0)).re
    };
    let mut rng = ChaCha8Rng::seed_from_u64(31415);
    for case in 0..20 {
        let rho = random_state(&mut rng, 2);
        let sigma = random_state(&mut rng, 2);
        let oracle = rho.matrix().trace_product(sigma.matrix()).re
            + 2.0 * (det2(rho.matrix()).max(0.0) * det2(sigma.matrix()).max(0.0)).sqrt();
        let f = fidelity(&rho, &sigma).unwrap();
        assert!(
            (f - oracle).abs() < 1e-10,
            "case {case}: fidelity {f} vs oracle {oracle}"
        );
    }
}
