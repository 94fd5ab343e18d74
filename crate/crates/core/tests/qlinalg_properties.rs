//! Property suite for the linear-algebra layer.

mod common;

use common::{arb_density, arb_observable};
use lur_core::qlinalg::{fidelity, nearest_density_matrix, ComplexSquareMatrix};
use num_complex::Complex64;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig { cases: 100, ..ProptestConfig::default() })]

    #[test]
    fn fidelity_is_symmetric((rho, sigma) in (arb_density(), arb_density())) {
        let f_rs = fidelity(&rho, &sigma).unwrap();
        let f_sr = fidelity(&sigma, &rho).unwrap();
        prop_assert!((0.0..=1.0).contains(&f_rs));
        prop_assert!((f_rs - f_sr).abs() <= 1e-8, "{f_rs} vs {f_sr}");
    }

    #[test]
    fn fidelity_with_self_is_one(rho in arb_density()) {
        let f = fidelity(&rho, &rho).unwrap();
        prop_assert!((f - 1.0).abs() <= 1e-9, "f = {f}");
    }

    #[test]
    fn projectors_complete_for_random_observables(obs in arb_observable()) {
        let sum = &obs.projector(0) + &obs.projector(1);
        prop_assert!(sum.approx_eq(&ComplexSquareMatrix::identity(2), 1e-10));
        let sq = &obs.projector(0) * &obs.projector(0);
        prop_assert!(sq.approx_eq(&obs.projector(0), 1e-10));
        // n·σ really has eigenvalues ±1.
        let eig = obs.matrix().hermitian_eigen();
        prop_assert!((eig.eigenvalues[0] + 1.0).abs() <= 1e-9);
        prop_assert!((eig.eigenvalues[1] - 1.0).abs() <= 1e-9);
    }

    #[test]
    fn nearest_density_matrix_is_idempotent(entries in proptest::collection::vec(-1.0f64..1.0, 32)) {
        // Random Hermitian input (not necessarily positive or unit trace).
        let mut g = ComplexSquareMatrix::zeros(4);
        for r in 0..4 {
            for c in 0..4 {
                let k = (r * 4 + c) * 2;
                g.set(r, c, Complex64::new(entries[k], entries[k + 1]));
            }
        }
        let herm = g.hermitian_part();
        let once = nearest_density_matrix(&herm);
        let twice = nearest_density_matrix(once.matrix());
        prop_assert!(twice.matrix().approx_eq(once.matrix(), 1e-10));
        // Output satisfies all density-matrix invariants.
        let vals = once.eigenvalues();
        prop_assert!(vals[0] >= -1e-12);
        prop_assert!((vals.iter().sum::<f64>() - 1.0).abs() <= 1e-10);
    }
}
