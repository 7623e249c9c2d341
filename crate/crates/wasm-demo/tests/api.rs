use froeberg_wasm_demo::{asymptotic_ratios, bound_table, froeberg_profile};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn profile_of_a_published_case() {
    let v = parse(froeberg_profile(2, "10,10,10,10,10,10"));
    assert_eq!(v["m0"], 16);
    assert_eq!(v["values"][16], -15.0);
    assert_eq!(v["clipped"][16], 0.0);
    assert_eq!(v["clipped"][29], 30.0);
    assert_eq!(v["lower"][29], 0.0);
    assert_eq!(v["bounds"]["tight"], 18);
    assert_eq!(v["values"].as_array().unwrap().len(), 59);
}

#[test]
fn profile_without_inclusion_bound() {
    let v = parse(froeberg_profile(2, "5,5"));
    assert!(v["m0"].is_null());
    assert!(v["bounds"].is_null());
}

#[test]
fn table_rows() {
    let v = parse(bound_table(3, 10, "4..11"));
    assert_eq!(v["generic"], serde_json::json!([40, 26, 24, 22, 22, 21, 20, 20]));
    assert_eq!(v["limit"]["semistable"], 31);
}

#[test]
fn ratios_approach_the_slope() {
    let v = parse(asymptotic_ratios(2, 10, "100,1000,10000"));
    let slope = v["predicted_slope"].as_f64().unwrap();
    let last = v["points"][2]["ratio"].as_f64().unwrap();
    assert!((last / slope - 1.0).abs() < 0.01);
}

#[test]
fn errors_are_reported_as_json() {
    for s in [
        froeberg_profile(0, "2,2"),
        froeberg_profile(1, "2,x"),
        froeberg_profile(1, "100000,100000,100000"),
        bound_table(2, 10, "9..3"),
        asymptotic_ratios(2, 10, "1000000"),
    ] {
        assert!(parse(s)["error"].is_string());
    }
}
