//! Grid checks over the noisy-singlet family: the violation hierarchy and
//! affinity of every functional in the mixing parameter.

use lur_core::werner::{closed_form_value, werner_state, witness_value_of_p, WernerParams};
use lur_core::witnesses::{WitnessKind, WitnessSpec};

const ALL_KINDS: [(WitnessKind, usize); 6] = [
    (WitnessKind::Entanglement, 2),
    (WitnessKind::Entanglement, 3),
    (WitnessKind::Steering, 2),
    (WitnessKind::Steering, 3),
    (WitnessKind::Chsh, 2),
    (WitnessKind::Bell3322, 3),
];

fn grid() -> impl Iterator<Item = f64> {
    (0..=20).map(|k| k as f64 * 0.05)
}

#[test]
fn violation_hierarchy_nests_on_the_grid() {
    // CHSH violation implies steering violation implies entanglement
    // violation (at equal n = 2), at every grid point.
    let chsh = WitnessSpec::canonical(WitnessKind::Chsh, 2).unwrap();
    let steering = WitnessSpec::canonical(WitnessKind::Steering, 2).unwrap();
    let ent = WitnessSpec::canonical(WitnessKind::Entanglement, 2).unwrap();
    for p in grid() {
        let state = werner_state(WernerParams::new(p).unwrap());
        let c = chsh.evaluate_state(&state).unwrap().violated;
        let s = steering.evaluate_state(&state).unwrap().violated;
        let e = ent.evaluate_state(&state).unwrap().violated;
        assert!(!c || s, "p={p}: CHSH violated without steering");
        assert!(!s || e, "p={p}: steering violated without entanglement");
    }
}

#[test]
fn functionals_are_affine_in_p() {
    // Three-point collinearity at several anchor triples.
    for (kind, n) in ALL_KINDS {
        for (lo, hi) in [(0.0, 1.0), (0.1, 0.9), (0.3, 0.7)] {
            let mid = (lo + hi) / 2.0;
            let f_lo = witness_value_of_p(kind, n, lo).unwrap();
            let f_mid = witness_value_of_p(kind, n, mid).unwrap();
            let f_hi = witness_value_of_p(kind, n, hi).unwrap();
            assert!(
                (f_mid - (f_lo + f_hi) / 2.0).abs() < 1e-9,
                "{kind:?} n={n} on [{lo},{hi}]"
            );
        }
    }
}

#[test]
fn pipeline_matches_closed_forms_on_the_grid() {
    for (kind, n) in ALL_KINDS {
        for p in grid() {
            let full = witness_value_of_p(kind, n, p).unwrap();
            let closed = closed_form_value(kind, n, p).unwrap();
            assert!(
                (full - closed).abs() <= 1e-9,
                "{kind:?} n={n} p={p}: {full} vs {closed}"
            );
        }
    }
}

#[test]
fn normalized_values_and_entropies_stay_in_range() {
    for (kind, n) in ALL_KINDS {
        let spec = WitnessSpec::canonical(kind, n).unwrap();
        for p in grid() {
            let state = werner_state(WernerParams::new(p).unwrap());
            let r = spec.evaluate_state(&state).unwrap();
            assert!((0.0..=1.0).contains(&r.normalized), "{kind:?} p={p}");
            assert!((0.0..=1.0).contains(&r.entropy), "{kind:?} p={p}");
            assert!(r.value <= r.algebraic_max + 1e-9, "{kind:?} p={p}");
        }
    }
}

#[test]
fn nothing_is_violated_at_p_zero() {
    for (kind, n) in ALL_KINDS {
        let spec = WitnessSpec::canonical(kind, n).unwrap();
        let state = werner_state(WernerParams::new(0.0).unwrap());
        assert!(!spec.evaluate_state(&state).unwrap().violated, "{kind:?}");
    }
}
