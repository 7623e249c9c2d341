//! Linear algebra in graded pieces of quotient rings `R = P/J`: ideal
//! membership, Frobenius powers of ideals, and closure checks by rank tests
//! in a single degree of `P`.

mod fixtures;
mod verify;

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use serde::Serialize;

use crate::arith::PrimeField;
use crate::macaulay::{monomials_of_degree, DegreeSpan, Form, FormSystem, Monomial};
use crate::{Error, Result};

pub use fixtures::{Fixture, FixtureRing};
pub use verify::{
    default_witnesses, is_primary, strictness_guard, tight_witness_scan, verify_theorem_b, verify_theorem_c, ElementResolution, ElementVerdict,
    StrictnessReport, TheoremBReport, TheoremCReport, TightScanReport, WitnessRow, DEFAULT_ROW_CAP,
};

/// A standard-graded quotient `P/J` of a polynomial ring over `F_p`.
///
/// Degree pieces of `J` are reduced once and cached; the cache is shared
/// safely between threads.
#[derive(Debug)]
pub struct GradedQuotient {
    modulus: FormSystem,
    cache: RwLock<HashMap<u32, Arc<DegreeSpan>>>,
}

impl Clone for GradedQuotient {
    fn clone(&self) -> Self {
        Self::new(self.modulus.clone())
    }
}

impl GradedQuotient {
    pub fn new(modulus: FormSystem) -> Self {
        Self {
            modulus,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn polynomial_ring(field: PrimeField, nvars: usize) -> Self {
        Self::new(FormSystem::empty(field, nvars))
    }

    pub fn field(&self) -> PrimeField {
        self.modulus.field()
    }

    pub fn nvars(&self) -> usize {
        self.modulus.nvars()
    }

    pub fn modulus(&self) -> &FormSystem {
        &self.modulus
    }

    /// `J_m` in echelon form.
    pub fn modulus_span(&self, m: u32) -> Arc<DegreeSpan> {
        if let Some(span) = self.cache.read().expect("cache lock").get(&m) {
            return Arc::clone(span);
        }
        let span = Arc::new(DegreeSpan::of_system(&self.modulus, m));
        self.cache
            .write()
            .expect("cache lock")
            .entry(m)
            .or_insert(span)
            .clone()
    }

    /// `dim R_m`.
    pub fn dimension_at(&self, m: u32) -> usize {
        self.modulus_span(m).codim()
    }

    /// Monomials of degree `m` whose classes form a basis of `R_m`.
    pub fn basis_at(&self, m: u32) -> Vec<Monomial> {
        let span = self.modulus_span(m);
        let mut is_pivot = vec![false; span.ambient_dim()];
        for c in span.echelon().pivot_columns() {
            is_pivot[c] = true;
        }
        monomials_of_degree(self.nvars(), m)
            .into_iter()
            .zip(is_pivot)
            .filter(|(_, pivot)| !pivot)
            .map(|(mono, _)| mono)
            .collect()
    }

    fn check_system(&self, system: &FormSystem) -> Result<()> {
        if system.field() != self.field() {
            return Err(Error::FieldMismatch);
        }
        if system.nvars() != self.nvars() {
            return Err(Error::Shape(format!(
                "ideal lives in {} variables, ring has {}",
                system.nvars(),
                self.nvars()
            )));
        }
        Ok(())
    }

    /// `(I + J)_m` in echelon form.
    pub fn ideal_span(&self, ideal: &FormSystem, m: u32) -> Result<DegreeSpan> {
        self.check_system(ideal)?;
        let mut span = DegreeSpan::clone(&self.modulus_span(m));
        span.add_system(ideal);
        Ok(span)
    }
}

/// `dim_k R_m`.
pub fn ring_dimension_at(ring: &GradedQuotient, m: u32) -> usize {
    ring.dimension_at(m)
}

/// Outcome of a rank test for `f ∈ (I + J)_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MembershipVerdict {
    pub contained: bool,
    pub degree: u32,
    pub rank_without: usize,
    pub rank_with: usize,
}

impl MembershipVerdict {
    fn from_span(span: &DegreeSpan, f: &Form) -> Result<Self> {
        let contained = span.contains(f)?;
        let rank_without = span.rank();
        Ok(Self {
            contained,
            degree: span.degree(),
            rank_without,
            rank_with: rank_without + usize::from(!contained),
        })
    }
}

fn check_form(ring: &GradedQuotient, f: &Form) -> Result<()> {
    if f.nvars() != ring.nvars() {
        return Err(Error::Shape(format!(
            "form lives in {} variables, ring has {}",
            f.nvars(),
            ring.nvars()
        )));
    }
    Ok(())
}

/// Whether `f ∈ I·R`, decided in `P` as `f ∈ (I + J)_{deg f}`.
pub fn ideal_membership(ring: &GradedQuotient, ideal: &FormSystem, f: &Form) -> Result<MembershipVerdict> {
    check_form(ring, f)?;
    let span = ring.ideal_span(ideal, f.degree())?;
    MembershipVerdict::from_span(&span, f)
}

fn require_frobenius_power(field: PrimeField, q: u64) -> Result<u32> {
    if !field.is_power_of_characteristic(q) {
        return Err(Error::NotFrobeniusPower {
            q,
            p: field.modulus(),
        });
    }
    u32::try_from(q).map_err(|_| Error::InvalidArgument(format!("q = {q} is too large")))
}

/// `I^[q] = (f_1^q, ..., f_n^q)`.
pub fn frobenius_power_ideal(ideal: &FormSystem, q: u64) -> Result<FormSystem> {
    let q = require_frobenius_power(ideal.field(), q)?;
    let forms = ideal.forms().iter().map(|f| f.frobenius(q)).collect();
    FormSystem::new(ideal.field(), ideal.nvars(), forms)
}

/// Whether `f^q ∈ I^[q]·R`.
pub fn frobenius_membership(ring: &GradedQuotient, ideal: &FormSystem, f: &Form, q: u64) -> Result<MembershipVerdict> {
    let qq = require_frobenius_power(ring.field(), q)?;
    ideal_membership(ring, &frobenius_power_ideal(ideal, q)?, &f.frobenius(qq))
}
