//! Plain-text form systems.
//!
//! ```text
//! p=7 v=3
//! # the Fermat cubic
//! 3; (3,0,0):1, (0,3,0):1, (0,0,3):1
//! ```
//!
//! One form per line as `degree; exponents:coefficient, ...`. Blank lines and
//! lines starting with `#` are skipped. A zero form is written `degree;`.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::arith::PrimeField;
use crate::{Error, Result};

use super::form::{Form, FormSystem};
use super::monomial::Monomial;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_header(line_no: usize, line: &str) -> Result<(PrimeField, usize)> {
    let mut p = None;
    let mut v = None;
    for token in line.split_whitespace() {
        let (key, value) = token
            .split_once('=')
            .ok_or_else(|| parse_err(line_no, format!("expected key=value, found {token:?}")))?;
        let value: u64 = value
            .parse()
            .map_err(|_| parse_err(line_no, format!("bad number in {token:?}")))?;
        match key {
            "p" => p = Some(value),
            "v" => v = Some(value),
            _ => return Err(parse_err(line_no, format!("unknown header key {key:?}"))),
        }
    }
    let p = p.ok_or_else(|| parse_err(line_no, "header lacks p="))?;
    let v = v.ok_or_else(|| parse_err(line_no, "header lacks v="))?;
    let field = PrimeField::new(p).map_err(|e| parse_err(line_no, e.to_string()))?;
    if v == 0 {
        return Err(parse_err(line_no, "v must be positive"));
    }
    Ok((field, v as usize))
}

fn parse_term(line_no: usize, nvars: usize, term: &str) -> Result<(Monomial, i64)> {
    let term = term.trim();
    let (exps, coeff) = term
        .rsplit_once(':')
        .ok_or_else(|| parse_err(line_no, format!("term {term:?} lacks ':'")))?;
    let exps = exps
        .trim()
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| parse_err(line_no, format!("exponents must be parenthesised in {term:?}")))?;
    let exps: Vec<u32> = exps
        .split(',')
        .map(|e| e.trim().parse())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| parse_err(line_no, format!("bad exponent in {term:?}")))?;
    if exps.len() != nvars {
        return Err(parse_err(
            line_no,
            format!("{} exponents in {term:?}, expected {nvars}", exps.len()),
        ));
    }
    let coeff: i64 = coeff
        .trim()
        .parse()
        .map_err(|_| parse_err(line_no, format!("bad coefficient in {term:?}")))?;
    Ok((Monomial::new(exps), coeff))
}

// Splits on commas outside parentheses.
fn split_terms(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out.into_iter().filter(|t| !t.trim().is_empty()).collect()
}

pub fn parse_system(text: &str) -> Result<FormSystem> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (header_no, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let (field, nvars) = parse_header(header_no, header)?;
    let mut forms = Vec::new();
    for (line_no, line) in lines {
        let (degree, rest) = line
            .split_once(';')
            .ok_or_else(|| parse_err(line_no, "expected 'degree;' prefix"))?;
        let degree: u32 = degree
            .trim()
            .parse()
            .map_err(|_| parse_err(line_no, format!("bad degree {degree:?}")))?;
        let terms = split_terms(rest)
            .into_iter()
            .map(|t| parse_term(line_no, nvars, t))
            .collect::<Result<Vec<_>>>()?;
        let form = Form::from_terms(field, nvars, degree, terms).map_err(|e| parse_err(line_no, e.to_string()))?;
        forms.push(form);
    }
    FormSystem::new(field, nvars, forms)
}

pub fn write_system(system: &FormSystem) -> String {
    let mut out = format!("p={} v={}\n", system.field().modulus(), system.nvars());
    for form in system.forms() {
        let _ = write!(out, "{};", form.degree());
        let terms: Vec<String> = form
            .sorted_terms()
            .into_iter()
            .map(|(m, c)| {
                let exps: Vec<String> = m.exponents().iter().map(u32::to_string).collect();
                format!("({}):{c}", exps.join(","))
            })
            .collect();
        if !terms.is_empty() {
            out.push(' ');
            out.push_str(&terms.join(", "));
        }
        out.push('\n');
    }
    out
}

impl FromStr for FormSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_system(s)
    }
}
