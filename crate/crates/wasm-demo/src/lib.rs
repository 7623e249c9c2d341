//! Browser bindings: every export takes plain numbers or strings and
//! returns a JSON document, `{"error": ...}` on bad input.

use froeberg_core::bounds::{asymptotic_ratio, build_table, parse_n_values, BoundReport};
use froeberg_core::froeberg::{DegreeType, FroebergProfile};
use froeberg_core::macaulay::froeberg_lower_bound;
use num_traits::ToPrimitive;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Keeps a single call well under a second in the browser.
const MAX_TOTAL_DEGREE: u64 = 200_000;
const MAX_POINTS: usize = 4_000;

fn respond(result: Result<Value, String>) -> String {
    match result {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| format!("cannot read {what} from {t:?}")))
        .collect()
}

fn check_size(dt: &DegreeType) -> Result<(), String> {
    if dt.total_degree() > MAX_TOTAL_DEGREE {
        return Err(format!("total degree above {MAX_TOTAL_DEGREE} is too slow for the page"));
    }
    Ok(())
}

/// `F(m)`, `F⁺(m)` and the Hilbert lower bound over `0..=Σa - d`, with
/// `m0` and the bounds derived from it. `degrees` is comma separated.
#[wasm_bindgen]
pub fn froeberg_profile(d: u32, degrees: &str) -> String {
    respond((|| {
        let dt = DegreeType::new(d, parse_list::<u32>(degrees, "a degree")?).map_err(|e| e.to_string())?;
        check_size(&dt)?;
        let profile = FroebergProfile::compute(&dt);
        let last = profile.values.len().min(MAX_POINTS);
        let values: Vec<f64> = profile.values[..last].iter().map(|v| v.to_f64().unwrap_or(f64::NAN)).collect();
        let lower: Vec<f64> = froeberg_lower_bound(&dt, last as u64 - 1).into_iter().map(|v| v as f64).collect();
        let bounds = match BoundReport::compute(&dt, None) {
            Ok(r) => json!({
                "tight": r.tight,
                "frobenius": r.frobenius,
                "koszul": r.koszul,
                "semistable": r.semistable,
                "semistable_frobenius": r.semistable_frobenius,
            }),
            Err(_) => Value::Null,
        };
        Ok(json!({
            "degree_type": dt.to_string(),
            "m0": profile.m0,
            "values": values,
            "clipped": values.iter().map(|v| v.max(0.0)).collect::<Vec<_>>(),
            "lower": lower,
            "truncated": last < profile.values.len(),
            "bounds": bounds,
        }))
    })())
}

/// Koszul, semistable and generic tight-closure bounds for constant degree
/// `a`; `n_values` reads like `3..8,10,11`.
#[wasm_bindgen]
pub fn bound_table(d: u32, a: u32, n_values: &str) -> String {
    respond((|| {
        let n_values = parse_n_values(n_values).map_err(|e| e.to_string())?;
        let biggest = n_values.iter().max().copied().unwrap_or(0) as u64;
        if biggest * a as u64 > MAX_TOTAL_DEGREE {
            return Err(format!("n * a above {MAX_TOTAL_DEGREE} is too slow for the page"));
        }
        let table = build_table(d, a, &n_values).map_err(|e| e.to_string())?;
        serde_json::to_value(table).map_err(|e| e.to_string())
    })())
}

/// `m0(a) / a` for each listed `a` next to the predicted slope.
#[wasm_bindgen]
pub fn asymptotic_ratios(d: u32, n: usize, a_values: &str) -> String {
    respond((|| {
        let a_values = parse_list::<u32>(a_values, "a degree")?;
        if a_values.iter().any(|&a| a as u64 * n as u64 > MAX_TOTAL_DEGREE) {
            return Err(format!("n * a above {MAX_TOTAL_DEGREE} is too slow for the page"));
        }
        let report = asymptotic_ratio(d, n, &a_values).map_err(|e| e.to_string())?;
        serde_json::to_value(report).map_err(|e| e.to_string())
    })())
}
