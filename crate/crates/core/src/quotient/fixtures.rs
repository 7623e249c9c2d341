use std::fmt;
use std::str::FromStr;

use crate::arith::PrimeField;
use crate::macaulay::{Form, FormSystem, Monomial};
use crate::{Error, Result};

use super::GradedQuotient;

/// Named rings with known a-invariant. The hypersurfaces are smooth
/// projective curves, so the rings are normal complete intersections.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Fixture {
    /// `x^3 + y^3 + z^3` over `F_32003`.
    FermatCubic,
    /// `x^3 + y^3 + z^3` over `F_2`.
    FermatCubicP2,
    /// `x^3 + y^3 + z^3` over `F_5`.
    FermatCubicP5,
    /// `x^3 + y^3 + z^3` over `F_7`.
    FermatCubicP7,
    /// `x^4 + y^4 + z^4` over `F_32003`.
    FermatQuartic,
    /// `F_32003[x, y, z]`.
    PolynomialRing,
}

/// A fixture ring at a chosen prime.
#[derive(Clone, Debug)]
pub struct FixtureRing {
    pub fixture: Fixture,
    pub field: PrimeField,
    quotient: GradedQuotient,
}

impl FixtureRing {
    pub fn ring(&self) -> GradedQuotient {
        self.quotient.clone()
    }

    pub fn quotient(&self) -> &GradedQuotient {
        &self.quotient
    }

    /// `sum deg h - v` for the defining equations.
    pub fn a_invariant(&self) -> i64 {
        self.fixture.a_invariant()
    }

    /// Krull dimension minus one.
    pub fn d(&self) -> u32 {
        (self.quotient.nvars() - self.quotient.modulus().len()) as u32 - 1
    }

    /// `(x, y)`.
    pub fn default_ideal(&self) -> FormSystem {
        FormSystem::new(self.field, 3, vec![Form::variable(3, 0), Form::variable(3, 1)])
            .expect("same ring")
    }
}

impl Fixture {
    pub const ALL: [Fixture; 6] = [
        Fixture::FermatCubic,
        Fixture::FermatCubicP2,
        Fixture::FermatCubicP5,
        Fixture::FermatCubicP7,
        Fixture::FermatQuartic,
        Fixture::PolynomialRing,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::FermatCubic => "fermat-cubic",
            Fixture::FermatCubicP2 => "fermat-cubic-p2",
            Fixture::FermatCubicP5 => "fermat-cubic-p5",
            Fixture::FermatCubicP7 => "fermat-cubic-p7",
            Fixture::FermatQuartic => "fermat-quartic",
            Fixture::PolynomialRing => "polynomial-ring",
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            Fixture::FermatCubic => "F_32003[x,y,z]/(x^3+y^3+z^3), a-invariant 0",
            Fixture::FermatCubicP2 => "F_2[x,y,z]/(x^3+y^3+z^3), a-invariant 0",
            Fixture::FermatCubicP5 => "F_5[x,y,z]/(x^3+y^3+z^3), a-invariant 0",
            Fixture::FermatCubicP7 => "F_7[x,y,z]/(x^3+y^3+z^3), a-invariant 0",
            Fixture::FermatQuartic => "F_32003[x,y,z]/(x^4+y^4+z^4), a-invariant 1",
            Fixture::PolynomialRing => "F_32003[x,y,z], a-invariant -3",
        }
    }

    pub fn default_prime(self) -> u64 {
        match self {
            Fixture::FermatCubicP2 => 2,
            Fixture::FermatCubicP5 => 5,
            Fixture::FermatCubicP7 => 7,
            _ => 32003,
        }
    }

    fn equation_degree(self) -> Option<u32> {
        match self {
            Fixture::FermatQuartic => Some(4),
            Fixture::PolynomialRing => None,
            _ => Some(3),
        }
    }

    pub fn a_invariant(self) -> i64 {
        match self.equation_degree() {
            Some(e) => e as i64 - 3,
            None => -3,
        }
    }

    pub fn build(self) -> FixtureRing {
        self.with_prime(self.default_prime()).expect("default primes are prime")
    }

    /// The same equations over another prime field. The caller is
    /// responsible for the ring staying smooth (characteristic not dividing
    /// the degree).
    pub fn with_prime(self, p: u64) -> Result<FixtureRing> {
        let field = PrimeField::new(p)?;
        let modulus = match self.equation_degree() {
            Some(e) => {
                let terms = (0..3).map(|i| (Monomial::variable(3, i).pow(e), 1));
                FormSystem::new(field, 3, vec![Form::from_terms(field, 3, e, terms)?])?
            }
            None => FormSystem::empty(field, 3),
        };
        Ok(FixtureRing {
            fixture: self,
            field,
            quotient: GradedQuotient::new(modulus),
        })
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Fixture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Fixture::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Fixture::ALL.iter().map(|f| f.name()).collect();
                Error::InvalidArgument(format!("unknown fixture {s:?}; expected one of {}", names.join(", ")))
            })
    }
}
