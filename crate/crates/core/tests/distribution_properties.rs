//! Property suite for the joint-distribution layer: every distribution
//! derived from a quantum state must be a normalized no-signalling table, and
//! its correlators must satisfy their algebraic identities.

mod common;

use common::{arb_density, arb_settings};
use lur_core::correlations::JointDistribution;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn born_distributions_are_valid((state, settings) in (arb_density(), arb_settings())) {
        // Construction validates range, normalization, and no-signalling.
        let dist = JointDistribution::from_state(&state, &settings).unwrap();
        let n = dist.n();

        prop_assert!(dist.no_signalling_defect() <= 1e-9);
        for i in 0..n {
            for j in 0..n {
                let sum: f64 = (0..2)
                    .flat_map(|a| (0..2).map(move |b| (a, b)))
                    .map(|(a, b)| dist.prob(i, j, a, b))
                    .sum();
                prop_assert!((sum - 1.0).abs() <= 1e-9);

                let e = dist.expectation(i, j).unwrap();
                prop_assert!((-1.0 - 1e-12..=1.0 + 1e-12).contains(&e));
            }
            // Pd + Ps = 1 and Pd = (1 − ⟨A_iB_i⟩)/2.
            let pd = dist.anti_corr_prob(i).unwrap();
            let ps = dist.same_corr_prob(i).unwrap();
            prop_assert!((pd + ps - 1.0).abs() <= 1e-9);
            let e = dist.expectation(i, i).unwrap();
            prop_assert!((pd - (1.0 - e) / 2.0).abs() <= 1e-9);
        }
    }
}
