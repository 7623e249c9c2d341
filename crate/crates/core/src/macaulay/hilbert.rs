use serde::Serialize;

use crate::arith::{Echelon, PrimeField};
use crate::{Error, Result};

use super::form::{Form, FormSystem};
use super::monomial::{monomials_of_degree, MonomialIndex};

/// The span of a set of degree-`m` forms inside `P_m`, kept in echelon form.
#[derive(Clone, Debug)]
pub struct DegreeSpan {
    index: MonomialIndex,
    echelon: Echelon,
}

impl DegreeSpan {
    pub fn new(field: PrimeField, nvars: usize, degree: u32) -> Self {
        let index = MonomialIndex::new(nvars, degree);
        let echelon = Echelon::new(field, index.len());
        Self { index, echelon }
    }

    /// Span of `I_m` for the ideal generated by `system`.
    pub fn of_system(system: &FormSystem, degree: u32) -> Self {
        let mut span = Self::new(system.field(), system.nvars(), degree);
        span.add_system(system);
        span
    }

    pub fn degree(&self) -> u32 {
        self.index.degree()
    }

    pub fn index(&self) -> &MonomialIndex {
        &self.index
    }

    pub fn echelon(&self) -> &Echelon {
        &self.echelon
    }

    /// `dim P_m`.
    pub fn ambient_dim(&self) -> usize {
        self.index.len()
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    /// `dim P_m - rank`.
    pub fn codim(&self) -> usize {
        self.ambient_dim() - self.rank()
    }

    pub fn is_full(&self) -> bool {
        self.echelon.is_full()
    }

    /// Adds every product `mu * f` with `deg mu = m - deg f`.
    pub fn add_form_multiples(&mut self, f: &Form) {
        let m = self.degree();
        if f.degree() > m || f.is_zero() || self.is_full() {
            return;
        }
        let nvars = self.index.nvars();
        let terms: Vec<(Vec<u32>, u32)> = f.terms().map(|(t, c)| (t.exponents().to_vec(), c)).collect();
        let index = &self.index;
        let ncols = index.len();
        let shifts = monomials_of_degree(nvars, m - f.degree());
        let mut scratch = vec![0u32; nvars];
        let rows = shifts.iter().map(|mu| {
            let mut row = vec![0u32; ncols];
            for (t, c) in &terms {
                for ((s, a), b) in scratch.iter_mut().zip(mu.exponents()).zip(t) {
                    *s = a + b;
                }
                row[index.rank(&scratch)] = *c;
            }
            row
        });
        self.echelon.extend(rows);
    }

    pub fn add_system(&mut self, system: &FormSystem) {
        for f in system.forms() {
            self.add_form_multiples(f);
        }
    }

    /// Whether `f` lies in the span. `f` must have degree `m`.
    pub fn contains(&self, f: &Form) -> Result<bool> {
        if f.degree() != self.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: f.degree(),
            });
        }
        Ok(self.echelon.contains(&f.to_dense(&self.index)))
    }
}

/// `dim (P/I)_m` for the ideal generated by `system`.
pub fn hilbert_value(system: &FormSystem, m: u32) -> u64 {
    DegreeSpan::of_system(system, m).codim() as u64
}

/// Values `H(0..=N)` and the first degree where `H` vanishes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertTable {
    pub values: Vec<u64>,
    pub first_zero: Option<u64>,
}

/// `H(0..=max_degree)`. Once `H(m) = 0` every later value is zero as well,
/// so no further ranks are computed.
pub fn hilbert_table(system: &FormSystem, max_degree: u32) -> HilbertTable {
    let mut values = Vec::with_capacity(max_degree as usize + 1);
    let mut first_zero = None;
    for m in 0..=max_degree {
        let h = if first_zero.is_some() {
            0
        } else {
            hilbert_value(system, m)
        };
        if h == 0 && first_zero.is_none() {
            first_zero = Some(m as u64);
        }
        values.push(h);
    }
    HilbertTable { values, first_zero }
}

/// Smallest `m` with `H(m) = 0`, searched up to `sum(deg f_i) - d + 1`
/// where `d + 1 = v`.
pub fn first_inclusion_degree(system: &FormSystem) -> Result<u64> {
    let total: u64 = system.degrees().iter().map(|&a| a as u64).sum();
    let d = system.nvars() as u64 - 1;
    let window = (total + 1).saturating_sub(d);
    for m in 0..=window {
        if hilbert_value(system, m as u32) == 0 {
            return Ok(m);
        }
    }
    Err(Error::NotPrimary(window))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::froeberg::{clip_nonneg, froeberg_series, smallest_zero, DegreeType};
    use crate::macaulay::{FormSampler, Monomial};
    use num_traits::ToPrimitive;

    fn pow_form(nvars: usize, i: usize, a: u32) -> Form {
        Form::monomial(Monomial::variable(nvars, i).pow(a))
    }

    fn field() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }

    #[test]
    fn squares_in_two_variables() {
        for p in [2, 3, 32003] {
            let f = PrimeField::new(p).unwrap();
            let sys = FormSystem::new(f, 2, vec![pow_form(2, 0, 2), pow_form(2, 1, 2)]).unwrap();
            let t = hilbert_table(&sys, 5);
            assert_eq!(t.values, vec![1, 2, 1, 0, 0, 0]);
            assert_eq!(t.first_zero, Some(3));
            assert_eq!(first_inclusion_degree(&sys).unwrap(), 3);
        }
    }

    #[test]
    fn zero_system_is_the_polynomial_ring() {
        let sys = FormSystem::empty(field(), 3);
        assert_eq!(hilbert_table(&sys, 4).values, vec![1, 3, 6, 10, 15]);
        let zero_form = FormSystem::new(field(), 3, vec![Form::zero(3, 2)]).unwrap();
        assert_eq!(hilbert_value(&zero_form, 4), 15);
    }

    #[test]
    fn pure_powers_vanish_at_socle_plus_one() {
        for a in 1..=5u32 {
            let sys = FormSystem::new(field(), 3, (0..3).map(|i| pow_form(3, i, a)).collect()).unwrap();
            assert_eq!(first_inclusion_degree(&sys).unwrap(), 3 * a as u64 - 2);
        }
    }

    #[test]
    fn four_random_quadrics() {
        let sys = FormSampler::new(7).system(field(), 3, &[2, 2, 2, 2]);
        let t = hilbert_table(&sys, 3);
        assert_eq!(t.values, vec![1, 3, 2, 0]);
        let dt = DegreeType::new(2, vec![2, 2, 2, 2]).unwrap();
        let predicted: Vec<u64> = clip_nonneg(&froeberg_series(&dt, 3))
            .coeffs()
            .iter()
            .map(|c| c.to_u64().unwrap())
            .collect();
        assert_eq!(predicted, t.values);
        assert_eq!(first_inclusion_degree(&sys).unwrap(), smallest_zero(&dt).unwrap());
    }

    #[test]
    fn five_random_forms_of_degree_ten() {
        let sys = FormSampler::new(7).system(field(), 3, &[10; 5]);
        assert_eq!(first_inclusion_degree(&sys).unwrap(), 17);
    }

    #[test]
    fn non_primary_is_reported() {
        let sys = FormSystem::new(field(), 3, vec![pow_form(3, 0, 2), pow_form(3, 1, 2)]).unwrap();
        assert!(matches!(first_inclusion_degree(&sys), Err(Error::NotPrimary(_))));
    }

    #[test]
    fn span_membership() {
        let sys = FormSystem::new(field(), 2, vec![pow_form(2, 0, 2)]).unwrap();
        let span = DegreeSpan::of_system(&sys, 3);
        assert!(span.contains(&pow_form(2, 0, 3)).unwrap());
        assert!(!span.contains(&pow_form(2, 1, 3)).unwrap());
        assert!(span.contains(&pow_form(2, 1, 2)).is_err());
    }
}
