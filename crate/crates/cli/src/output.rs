use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::{Map, Value};

pub const SCHEMA: u64 = 1;

/// A finished command: one rendering per output format.
pub struct Rendered {
    pub json: Value,
    pub tsv: String,
    pub pretty: String,
    /// A verified invariant was broken.
    pub failed: bool,
}

/// `{schema, command, seed, ...fields of report}`.
pub fn envelope(command: &str, seed: u64, report: &impl Serialize) -> Value {
    let mut map = Map::new();
    map.insert("schema".into(), SCHEMA.into());
    map.insert("command".into(), command.into());
    map.insert("seed".into(), seed.into());
    match serde_json::to_value(report).expect("reports serialize") {
        Value::Object(fields) => map.extend(fields),
        other => {
            map.insert("report".into(), other);
        }
    }
    Value::Object(map)
}

/// Integers that fit in `i64` as JSON numbers, larger ones as strings.
pub fn big(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) => x.into(),
        None => v.to_string().into(),
    }
}

pub fn tsv_row<I, T>(cells: I) -> String
where
    I: IntoIterator<Item = T>,
    T: ToString,
{
    let cells: Vec<String> = cells.into_iter().map(|c| c.to_string()).collect();
    cells.join("\t") + "\n"
}

/// Right-aligned columns separated by two spaces.
pub fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, s)| {
                if c == 0 {
                    format!("{s:<w$}", w = widths[c])
                } else {
                    format!("{s:>w$}", w = widths[c])
                }
            })
            .collect();
        let _ = writeln!(out, "{}", line.join("  ").trim_end());
    }
    out
}

pub fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}
