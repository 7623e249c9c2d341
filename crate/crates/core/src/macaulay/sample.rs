use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::arith::PrimeField;

use super::form::{Form, FormSystem};
use super::monomial::monomials_of_degree;

/// Seeded source of random forms.
///
/// The generator is SplitMix64 whose state starts at the seed. Field
/// elements are drawn by rejection: a 64-bit output `x` is accepted when
/// `x < floor(2^64 / p) * p` and mapped to `x mod p`. Dense forms draw one
/// coefficient per monomial in [`monomials_of_degree`] order.
#[derive(Clone, Debug)]
pub struct FormSampler {
    rng: SplitMix64,
}

impl FormSampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: SplitMix64::seed_from_u64(seed),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    pub fn element(&mut self, field: PrimeField) -> u32 {
        let p = field.modulus() as u64;
        let limit = (u64::MAX / p) * p;
        loop {
            let x = self.rng.next_u64();
            if x < limit {
                return (x % p) as u32;
            }
        }
    }

    pub fn form(&mut self, field: PrimeField, nvars: usize, degree: u32) -> Form {
        let terms: Vec<_> = monomials_of_degree(nvars, degree)
            .into_iter()
            .map(|m| (m, self.element(field) as i64))
            .collect();
        Form::from_terms(field, nvars, degree, terms).expect("monomials have the right degree")
    }

    pub fn system(&mut self, field: PrimeField, nvars: usize, degrees: &[u32]) -> FormSystem {
        let forms = degrees.iter().map(|&a| self.form(field, nvars, a)).collect();
        FormSystem::new(field, nvars, forms).expect("forms share the ring")
    }
}

/// A dense random form, reproducible from `seed`.
pub fn random_form(nvars: usize, degree: u32, field: PrimeField, seed: u64) -> Form {
    FormSampler::new(seed).form(field, nvars, degree)
}

/// Seed for the `index`-th independent draw derived from a master seed:
/// the `index`-th output of SplitMix64 started at `seed`.
pub fn derived_seed(seed: u64, index: usize) -> u64 {
    let mut rng = SplitMix64::seed_from_u64(seed);
    for _ in 0..index {
        rng.next_u64();
    }
    rng.next_u64()
}
