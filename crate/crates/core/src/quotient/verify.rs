use std::collections::hash_map::Entry;
use std::collections::HashMap;

use serde::Serialize;

use crate::arith::binom_usize;
use crate::bounds::{generic_frobenius_bound, generic_ideal_bound};
use crate::froeberg::{smallest_zero, DegreeType};
use crate::macaulay::{derived_seed, monomials_of_degree, write_system, DegreeSpan, Form, FormSampler, FormSystem};
use crate::{Error, Result};

use super::{frobenius_power_ideal, GradedQuotient};

/// Largest `dim P_m` a Frobenius test may touch.
pub const DEFAULT_ROW_CAP: usize = 100_000;

/// Whether `I + J` is primary to the irrelevant ideal, tested by `P_W ⊆ I + J`
/// at `W = v (D - 1) + 1` with `D` the largest generator degree.
pub fn is_primary(ring: &GradedQuotient, ideal: &FormSystem) -> Result<bool> {
    let top = ideal
        .forms()
        .iter()
        .chain(ring.modulus().forms())
        .filter(|f| !f.is_zero())
        .map(Form::degree)
        .max();
    let Some(top) = top else {
        return Ok(false);
    };
    let w = ring.nvars() as u32 * top.saturating_sub(1) + 1;
    Ok(ring.ideal_span(ideal, w)?.is_full())
}

fn check_dimension(ring: &GradedQuotient, dt: &DegreeType) -> Result<()> {
    let dim = ring.nvars() as i64 - ring.modulus().len() as i64;
    if dim != dt.d() as i64 + 1 {
        return Err(Error::Shape(format!(
            "{dt} needs a ring of dimension {}, the quotient has dimension {dim}",
            dt.d() + 1
        )));
    }
    Ok(())
}

/// A random primary ideal of the degree type together with the draw count
/// and the seed of the accepted draw.
fn draw_primary(ring: &GradedQuotient, dt: &DegreeType, seed: u64, max_draws: usize) -> Result<(FormSystem, usize, u64)> {
    for k in 0..max_draws {
        let s = derived_seed(seed, k);
        let ideal = FormSampler::new(s).system(ring.field(), ring.nvars(), dt.degrees());
        if is_primary(ring, &ideal)? {
            return Ok((ideal, k + 1, s));
        }
    }
    Err(Error::InvalidArgument(format!(
        "no primary ideal of type {dt} in {max_draws} random draws"
    )))
}

/// Membership of one basis element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementVerdict {
    pub element: String,
    pub contained: bool,
}

fn element_verdicts(ring: &GradedQuotient, span: &DegreeSpan) -> Result<Vec<ElementVerdict>> {
    ring.basis_at(span.degree())
        .into_iter()
        .map(|b| {
            let contained = span.contains(&Form::monomial(b.clone()))?;
            Ok(ElementVerdict {
                element: b.to_string(),
                contained,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremCReport {
    pub degree_type: DegreeType,
    pub a_invariant: i64,
    pub m0: u64,
    pub bound: u32,
    pub draws: usize,
    pub draw_seed: u64,
    pub ideal: String,
    pub basis_size: usize,
    pub not_contained: usize,
    pub elements: Vec<ElementVerdict>,
    pub passed: bool,
}

/// Draws generators of the degree type in `R` and checks that every basis
/// element of `R` in degree `m0 + d + 1 + a` lies in the ideal they generate.
pub fn verify_theorem_c(
    ring: &GradedQuotient,
    dt: &DegreeType,
    a_invariant: i64,
    seed: u64,
    max_draws: usize,
) -> Result<TheoremCReport> {
    check_dimension(ring, dt)?;
    let bound = generic_ideal_bound(dt, a_invariant)?;
    let bound = u32::try_from(bound).map_err(|_| Error::InvalidArgument(format!("bound {bound} is negative")))?;
    let m0 = smallest_zero(dt)?;
    let (ideal, draws, draw_seed) = draw_primary(ring, dt, seed, max_draws)?;
    let span = ring.ideal_span(&ideal, bound)?;
    let elements = element_verdicts(ring, &span)?;
    let not_contained = elements.iter().filter(|e| !e.contained).count();
    Ok(TheoremCReport {
        degree_type: dt.clone(),
        a_invariant,
        m0,
        bound,
        draws,
        draw_seed,
        ideal: write_system(&ideal),
        basis_size: elements.len(),
        not_contained,
        passed: not_contained == 0,
        elements,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StrictnessReport {
    pub degree_type: DegreeType,
    pub bound: u32,
    pub degree: u32,
    pub draws: usize,
    pub ideal: String,
    pub basis_size: usize,
    pub outside: Vec<String>,
    pub holds: bool,
}

/// One degree below the ideal bound some basis element must stay outside
/// the ideal.
pub fn strictness_guard(
    ring: &GradedQuotient,
    dt: &DegreeType,
    a_invariant: i64,
    seed: u64,
    max_draws: usize,
) -> Result<StrictnessReport> {
    check_dimension(ring, dt)?;
    let bound = generic_ideal_bound(dt, a_invariant)?;
    if bound < 1 {
        return Err(Error::InvalidArgument(format!("bound {bound} leaves no degree below it")));
    }
    let degree = bound as u32 - 1;
    let (ideal, draws, _) = draw_primary(ring, dt, seed, max_draws)?;
    let span = ring.ideal_span(&ideal, degree)?;
    let elements = element_verdicts(ring, &span)?;
    let outside: Vec<String> = elements.iter().filter(|e| !e.contained).map(|e| e.element.clone()).collect();
    Ok(StrictnessReport {
        degree_type: dt.clone(),
        bound: bound as u32,
        degree,
        draws,
        ideal: write_system(&ideal),
        basis_size: elements.len(),
        holds: !outside.is_empty(),
        outside,
    })
}

/// Smallest `q` found with `b^q ∈ I^[q]`, if any.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementResolution {
    pub element: String,
    pub resolved_at: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremBReport {
    pub degree_type: DegreeType,
    pub p: u32,
    pub bound: u32,
    pub ideal: String,
    /// Candidate exponents in search order; the search stops once all elements resolve.
    pub q_values: Vec<u64>,
    pub basis_size: usize,
    pub resolved: usize,
    pub elements: Vec<ElementResolution>,
    pub all_resolved: bool,
    pub evidence: &'static str,
}

/// `1, p, p^2, ...` up to `q_max` and while `dim P_{q·degree}` stays within
/// `row_cap`.
fn q_ladder(p: u64, q_max: u64, nvars: usize, degree: u32, row_cap: usize) -> Vec<u64> {
    let mut out = Vec::new();
    let mut q = 1u64;
    while q <= q_max {
        let dim = binom_usize((q * degree as u64) as usize + nvars - 1, nvars - 1);
        if dim.is_none_or(|d| d > row_cap) {
            break;
        }
        out.push(q);
        match q.checked_mul(p) {
            Some(next) => q = next,
            None => break,
        }
    }
    out
}

/// For each basis element `b` of `R` in degree `m0 + d + 1`, searches for
/// a `q` with `b^q ∈ I^[q]`. `ideal` defaults to random generators of the
/// degree type; `q_max` defaults to `p^4`.
pub fn verify_theorem_b(
    ring: &GradedQuotient,
    dt: &DegreeType,
    ideal: Option<&FormSystem>,
    q_max: Option<u64>,
    seed: u64,
    row_cap: usize,
) -> Result<TheoremBReport> {
    check_dimension(ring, dt)?;
    let bound = generic_frobenius_bound(dt)? as u32;
    let ideal = match ideal {
        Some(i) => {
            let mut found = i.degrees();
            found.sort_unstable_by(|a, b| b.cmp(a));
            if found != dt.degrees() {
                return Err(Error::InvalidArgument(format!("ideal degrees {found:?} do not match {dt}")));
            }
            i.clone()
        }
        None => draw_primary(ring, dt, seed, 16)?.0,
    };
    let p = ring.field().modulus() as u64;
    let q_max = q_max.unwrap_or(p.pow(4));
    let q_values = q_ladder(p, q_max, ring.nvars(), bound, row_cap);
    let basis = ring.basis_at(bound);
    let mut resolved_at: Vec<Option<u64>> = vec![None; basis.len()];
    for &q in &q_values {
        if resolved_at.iter().all(Option::is_some) {
            break;
        }
        let span = ring.ideal_span(&frobenius_power_ideal(&ideal, q)?, bound * q as u32)?;
        for (b, slot) in basis.iter().zip(resolved_at.iter_mut()) {
            if slot.is_none() && span.contains(&Form::monomial(b.pow(q as u32)))? {
                *slot = Some(q);
            }
        }
    }
    let elements: Vec<ElementResolution> = basis
        .iter()
        .zip(&resolved_at)
        .map(|(b, &r)| ElementResolution {
            element: b.to_string(),
            resolved_at: r,
        })
        .collect();
    let resolved = resolved_at.iter().filter(|r| r.is_some()).count();
    Ok(TheoremBReport {
        degree_type: dt.clone(),
        p: p as u32,
        bound,
        ideal: write_system(&ideal),
        q_values,
        basis_size: basis.len(),
        resolved,
        all_resolved: resolved == basis.len(),
        elements,
        evidence: "bounded-q evidence: an unresolved element is not a counterexample",
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessRow {
    pub witness: String,
    /// `(q, u f^q ∈ I^[q])` in the order of the requested `q`.
    pub verdicts: Vec<(u64, bool)>,
    pub passes_all: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TightScanReport {
    pub element: String,
    pub rows: Vec<WitnessRow>,
    pub witness: Option<String>,
    pub evidence: &'static str,
}

/// Tests `u f^q ∈ I^[q]` in `R` for every witness `u` and every `q`.
pub fn tight_witness_scan(
    ring: &GradedQuotient,
    ideal: &FormSystem,
    f: &Form,
    witnesses: &[Form],
    q_list: &[u64],
) -> Result<TightScanReport> {
    if witnesses.iter().any(Form::is_zero) {
        return Err(Error::InvalidArgument("witnesses must be non-zero".into()));
    }
    let field = ring.field();
    let powers = q_list
        .iter()
        .map(|&q| Ok((q, frobenius_power_ideal(ideal, q)?)))
        .collect::<Result<Vec<_>>>()?;
    let mut spans: HashMap<(u64, u32), DegreeSpan> = HashMap::new();
    let mut rows = Vec::with_capacity(witnesses.len());
    for u in witnesses {
        let mut verdicts = Vec::with_capacity(powers.len());
        for (q, iq) in &powers {
            let g = u.mul(&f.frobenius(*q as u32), field);
            let key = (*q, g.degree());
            let span = match spans.entry(key) {
                Entry::Occupied(e) => e.into_mut(),
                Entry::Vacant(e) => e.insert(ring.ideal_span(iq, g.degree())?),
            };
            verdicts.push((*q, span.contains(&g)?));
        }
        rows.push(WitnessRow {
            witness: u.to_string(),
            passes_all: verdicts.iter().all(|v| v.1),
            verdicts,
        });
    }
    Ok(TightScanReport {
        element: f.to_string(),
        witness: rows.iter().find(|r| r.passes_all).map(|r| r.witness.clone()),
        rows,
        evidence: "finitely many q tested: evidence for tight closure, not a certificate",
    })
}

/// All monomials of degree one and two.
pub fn default_witnesses(nvars: usize) -> Vec<Form> {
    (1..=2)
        .flat_map(|m| monomials_of_degree(nvars, m))
        .map(Form::monomial)
        .collect()
}
