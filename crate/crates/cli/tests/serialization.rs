//! Contracts for the library-level JSON shapes of the core types the CLI
//! exposes: exact field names for witness results, and the documented nested
//! index order for distribution tables.

use lur_core::correlations::JointDistribution;
use lur_core::qlinalg::PureState;
use lur_core::witnesses::{canonical_settings, WitnessKind, WitnessSpec};

#[test]
fn witness_result_serializes_with_exact_field_names() {
    let spec = WitnessSpec::canonical(WitnessKind::Steering, 3).unwrap();
    let result = spec
        .evaluate_state(&PureState::singlet().density())
        .unwrap();
    let json = serde_json::to_value(&result).unwrap();
    let object = json.as_object().unwrap();
    let mut keys: Vec<&str> = object.keys().map(String::as_str).collect();
    keys.sort_unstable();
    assert_eq!(
        keys,
        [
            "algebraic_max",
            "bound",
            "entropy",
            "kind",
            "n",
            "normalized",
            "value",
            "violated"
        ]
    );
    assert_eq!(json["kind"], "steering");
    assert_eq!(json["n"], 3);
    assert_eq!(json["violated"], true);
}

#[test]
fn joint_distribution_serializes_as_nested_ijab_arrays() {
    let settings = canonical_settings(WitnessKind::Steering, 2).unwrap();
    let dist = JointDistribution::from_state(&PureState::singlet().density(), &settings).unwrap();
    let json = serde_json::to_value(&dist).unwrap();
    assert_eq!(json["n"], 2);
    let table = json["table"].as_array().unwrap();
    assert_eq!(table.len(), 2); // i
    assert_eq!(table[0].as_array().unwrap().len(), 2); // j
                                                       // Innermost [a][b] blocks are 2×2 and match the accessors.
    for i in 0..2 {
        for j in 0..2 {
            for a in 0..2 {
                for b in 0..2 {
                    let entry = json["table"][i][j][a][b].as_f64().unwrap();
                    assert_eq!(entry, dist.prob(i, j, a, b));
                }
            }
        }
    }
}
