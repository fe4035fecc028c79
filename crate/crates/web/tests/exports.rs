use serde_json::Value;

use lattice_walks_web::{endpoint_distribution_json, losing_time_laws_json, moment_curve_json};

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn distribution_of_unit_bridges() {
    let v = parse(endpoint_distribution_json("1,0;0,1", 2, 2, "a1", 4).unwrap());
    assert_eq!(
        v["coefficients"],
        serde_json::json!(["2", "0", "2", "0", "2"])
    );
    let p: Vec<f64> = v["probabilities_f64"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_f64().unwrap())
        .collect();
    assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-12);
    assert_eq!(v["moments"]["mean"], "2");
    assert_eq!(v["moments"]["variance"], "8/3");
}

#[test]
fn unreachable_endpoint_has_no_moments() {
    let v = parse(endpoint_distribution_json("2,0;0,2", 1, 1, "a2", 4).unwrap());
    assert_eq!(v["coefficients"], serde_json::json!([]));
    assert!(v["moments"].is_null());
}

#[test]
fn bad_inputs_are_reported() {
    assert!(endpoint_distribution_json("1,0;0,0", 1, 1, "a1", 4).is_err());
    assert!(endpoint_distribution_json("1,0;0,1", 1, 1, "a3", 4).is_err());
    assert!(endpoint_distribution_json("1,0;0,1", 1000, 1, "a1", 4).is_err());
    assert!(moment_curve_json("1,0;0,1", 10, 1).is_err());
}

#[test]
fn moment_curve_tracks_exact_values() {
    let v = parse(moment_curve_json("1,0;0,1", 40, 4).unwrap());
    let points = v["points"].as_array().unwrap();
    assert_eq!(points.len(), 40);
    for pt in points {
        let n = pt["n"].as_f64().unwrap();
        assert!((pt["mean_over_n"].as_f64().unwrap() - 1.0).abs() < 1e-12);
        let want = (n * n / 3.0 + 2.0 * n / 3.0) / (n * n);
        assert!((pt["variance_over_n2"].as_f64().unwrap() - want).abs() < 1e-12);
    }
    // walks with only even steps reach (n, n) for even n only
    let v = parse(moment_curve_json("2,0;0,2", 10, 3).unwrap());
    let ns: Vec<u64> = v["points"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p["n"].as_u64().unwrap())
        .collect();
    assert_eq!(ns, [2, 4, 6, 8, 10]);
}

#[test]
fn losing_time_laws() {
    let v = parse(losing_time_laws_json(2).unwrap());
    assert_eq!(v["arcsine"], serde_json::json!(["6", "4", "6"]));
    assert_eq!(v["chung_feller"], serde_json::json!(["2", "2", "2"]));
    assert_eq!(v["catalan"], "2");
    let v = parse(losing_time_laws_json(0).unwrap());
    assert_eq!(v["chung_feller"], serde_json::json!(["1"]));
}
