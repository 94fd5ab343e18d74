//! Shared random-object strategies for the property suites.
#![allow(dead_code)] // each test binary uses a different subset

use lur_core::correlations::SettingPair;
use lur_core::qlinalg::{BlochObservable, ComplexSquareMatrix, DensityMatrix};
use num_complex::Complex64;
use proptest::prelude::*;

/// Random mixed two-qubit state: ρ = GG†/Tr(GG†) for a random complex G.
pub fn arb_density() -> impl Strategy<Value = DensityMatrix> {
    proptest::collection::vec(-1.0f64..1.0, 32).prop_filter_map("degenerate trace", |v| {
        let mut g = ComplexSquareMatrix::zeros(4);
        for r in 0..4 {
            for c in 0..4 {
                let k = (r * 4 + c) * 2;
                g.set(r, c, Complex64::new(v[k], v[k + 1]));
            }
        }
        let gram = &g * &g.adjoint();
        let trace = gram.trace().re;
        if trace < 1e-6 {
            return None;
        }
        DensityMatrix::new(gram.scale(1.0 / trace)).ok()
    })
}

/// Random ±1 observable from a nonzero direction.
pub fn arb_observable() -> impl Strategy<Value = BlochObservable> {
    proptest::array::uniform3(-1.0f64..1.0).prop_filter_map("zero direction", |v| {
        BlochObservable::from_direction(v).ok()
    })
}

/// Random setting pair with n ∈ {1, 2, 3} observables per side.
pub fn arb_settings() -> impl Strategy<Value = SettingPair> {
    (1usize..=3).prop_flat_map(|n| {
        (
            proptest::collection::vec(arb_observable(), n),
            proptest::collection::vec(arb_observable(), n),
        )
            .prop_map(|(alice, bob)| SettingPair::new(alice, bob).expect("equal lengths"))
    })
}
