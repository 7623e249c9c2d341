use std::collections::BTreeMap;
use std::fmt;

use crate::arith::PrimeField;
use crate::{Error, Result};

use super::monomial::{Monomial, MonomialIndex};

/// A homogeneous polynomial over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Form {
    nvars: usize,
    degree: u32,
    terms: BTreeMap<Monomial, u32>,
}

impl Form {
    pub fn zero(nvars: usize, degree: u32) -> Self {
        Self {
            nvars,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Builds a form from `(monomial, coefficient)` pairs, summing repeated
    /// monomials and dropping zero coefficients.
    pub fn from_terms<I>(field: PrimeField, nvars: usize, degree: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, i64)>,
    {
        let mut out = Self::zero(nvars, degree);
        for (mono, c) in terms {
            if mono.nvars() != nvars {
                return Err(Error::Shape(format!(
                    "monomial {mono} has {} variables, expected {nvars}",
                    mono.nvars()
                )));
            }
            if mono.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: mono.degree(),
                });
            }
            out.add_term(field, mono, field.from_i64(c));
        }
        Ok(out)
    }

    /// The monomial itself with coefficient one.
    pub fn monomial(mono: Monomial) -> Self {
        let mut out = Self::zero(mono.nvars(), mono.degree());
        out.terms.insert(mono, 1);
        out
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        Self::monomial(Monomial::variable(nvars, i))
    }

    fn add_term(&mut self, field: PrimeField, mono: Monomial, c: u32) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(mono).or_insert(0);
        *entry = field.add(*entry, c);
        if *entry == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, u32)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coefficient(&self, mono: &Monomial) -> u32 {
        self.terms.get(mono).copied().unwrap_or(0)
    }

    /// Terms listed largest monomial first in degrevlex.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, u32)> {
        let mut out: Vec<_> = self.terms().collect();
        out.sort_by(|a, b| b.0.cmp_degrevlex(a.0));
        out
    }

    pub fn add(&self, other: &Form, field: PrimeField) -> Result<Form> {
        if self.nvars != other.nvars {
            return Err(Error::Shape("forms in different rings".into()));
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(field, m.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: u32, field: PrimeField) -> Form {
        let c = field.reduce(c as u64);
        let mut out = Self::zero(self.nvars, self.degree);
        if c != 0 {
            out.terms = self.terms.iter().map(|(m, &t)| (m.clone(), field.mul(t, c))).collect();
        }
        out
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> Form {
        Form {
            nvars: self.nvars,
            degree: self.degree + mono.degree(),
            terms: self.terms.iter().map(|(m, &c)| (m.mul(mono), c)).collect(),
        }
    }

    pub fn mul(&self, other: &Form, field: PrimeField) -> Form {
        let mut out = Self::zero(self.nvars, self.degree + other.degree);
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                out.add_term(field, a.mul(b), field.mul(ca, cb));
            }
        }
        out
    }

    /// `self^q` computed by scaling exponents. Only the `q`-th power when
    /// `q` is a power of the characteristic.
    pub fn frobenius(&self, q: u32) -> Form {
        Form {
            nvars: self.nvars,
            degree: self.degree * q,
            terms: self.terms.iter().map(|(m, &c)| (m.pow(q), c)).collect(),
        }
    }

    /// Dense coefficient row indexed by `index`, which must have this
    /// form's degree.
    pub fn to_dense(&self, index: &MonomialIndex) -> Vec<u32> {
        assert_eq!(index.degree(), self.degree, "index degree differs from form degree");
        let mut row = vec![0u32; index.len()];
        for (m, c) in self.terms() {
            row[index.rank(m.exponents())] = c;
        }
        row
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .sorted_terms()
            .into_iter()
            .map(|(m, c)| match (c, m.degree()) {
                (1, d) if d > 0 => m.to_string(),
                (_, 0) => c.to_string(),
                _ => format!("{c}*{m}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Forms `f_1, ..., f_n` over a common field and variable set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormSystem {
    field: PrimeField,
    nvars: usize,
    forms: Vec<Form>,
}

impl FormSystem {
    pub fn new(field: PrimeField, nvars: usize, forms: Vec<Form>) -> Result<Self> {
        if nvars == 0 {
            return Err(Error::InvalidArgument("need at least one variable".into()));
        }
        if let Some(f) = forms.iter().find(|f| f.nvars() != nvars) {
            return Err(Error::Shape(format!(
                "form has {} variables, system has {nvars}",
                f.nvars()
            )));
        }
        Ok(Self { field, nvars, forms })
    }

    pub fn empty(field: PrimeField, nvars: usize) -> Self {
        Self {
            field,
            nvars,
            forms: Vec::new(),
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn forms(&self) -> &[Form] {
        &self.forms
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.forms.iter().map(Form::degree).collect()
    }

    pub fn push(&mut self, form: Form) -> Result<()> {
        if form.nvars() != self.nvars {
            return Err(Error::Shape("form in a different ring".into()));
        }
        self.forms.push(form);
        Ok(())
    }

    /// The union of both generator lists.
    pub fn union(&self, other: &FormSystem) -> Result<FormSystem> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.nvars != other.nvars {
            return Err(Error::Shape("systems in different rings".into()));
        }
        let mut forms = self.forms.clone();
        forms.extend(other.forms.iter().cloned());
        Ok(Self {
            field: self.field,
            nvars: self.nvars,
            forms,
        })
    }

    /// The ideal generated by all variables.
    pub fn maximal_ideal(field: PrimeField, nvars: usize) -> Self {
        Self {
            field,
            nvars,
            forms: (0..nvars).map(|i| Form::variable(nvars, i)).collect(),
        }
    }
}
