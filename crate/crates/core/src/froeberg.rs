//! The Fröberg function of a degree type and its smallest zero.
//!
//! For degrees `A = (a_1, .., a_n)` in a polynomial ring with `d + 1`
//! variables, `F(m) = sum_{B ⊆ A} (-1)^{|B|} C(d + m - ΣB, d)`, which is the
//! coefficient of `λ^m` in `Π (1 - λ^{a_i}) / (1 - λ)^{d+1}`. Its first
//! non-positive value `m0` is the predicted generic ideal-inclusion degree.

use std::collections::BTreeMap;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{binom, TruncatedSeries};
use crate::error::{Error, Result};

/// A multiset of generator degrees together with the projective dimension `d`
/// (the polynomial ring has `d + 1` variables).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreeType {
    d: u32,
    /// Sorted descending.
    degrees: Vec<u32>,
}

impl DegreeType {
    pub fn new(d: u32, degrees: impl Into<Vec<u32>>) -> Result<Self> {
        let mut degrees = degrees.into();
        if d == 0 {
            return Err(Error::InvalidDegreeType("d must be at least 1".into()));
        }
        if degrees.is_empty() {
            return Err(Error::InvalidDegreeType("need at least one generator".into()));
        }
        if degrees.contains(&0) {
            return Err(Error::InvalidDegreeType("generator degrees must be positive".into()));
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { d, degrees })
    }

    /// `n` generators of the same degree `a`.
    pub fn constant(d: u32, n: usize, a: u32) -> Result<Self> {
        Self::new(d, vec![a; n])
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn n(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn total_degree(&self) -> u64 {
        self.degrees.iter().map(|&a| a as u64).sum()
    }

    /// The common degree when all generators have the same degree.
    pub fn constant_degree(&self) -> Option<u32> {
        let a = self.degrees[0];
        self.degrees.iter().all(|&b| b == a).then_some(a)
    }

    /// `(degree, multiplicity)` pairs, degrees descending.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &a in &self.degrees {
            match out.last_mut() {
                Some((b, c)) if *b == a => *c += 1,
                _ => out.push((a, 1)),
            }
        }
        out
    }

    /// Whether `n >= d + 1`, i.e. a generic system is primary.
    pub fn has_inclusion_bound(&self) -> bool {
        self.n() > self.d as usize
    }

    pub(crate) fn require_inclusion_bound(&self) -> Result<()> {
        if self.has_inclusion_bound() {
            Ok(())
        } else {
            Err(Error::NoInclusionBound {
                n: self.n(),
                d: self.d,
            })
        }
    }
}

impl std::fmt::Display for DegreeType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let degs: Vec<String> = self.degrees.iter().map(u32::to_string).collect();
        write!(f, "d={} A=({})", self.d, degs.join(","))
    }
}

/// `F(m)` by summing over sub-multisets `B ⊆ A`, enumerated by multiplicity
/// vectors so repeated degrees cost nothing extra.
pub fn froeberg_value(dt: &DegreeType, m: u64) -> BigInt {
    let groups = dt.multiplicities();
    let d = dt.d() as i64;
    let mut counts = vec![0usize; groups.len()];
    let mut total = BigInt::zero();
    loop {
        let mut weight = BigInt::one();
        let mut size = 0u64;
        let mut len = 0usize;
        for (&k, &(a, c)) in counts.iter().zip(&groups) {
            weight *= binom(c as i64, k as i64);
            size += k as u64 * a as u64;
            len += k;
        }
        if size <= m {
            let term = weight * binom(d + (m - size) as i64, d);
            if len.is_multiple_of(2) {
                total += term;
            } else {
                total -= term;
            }
        }
        // Odometer step over 0..=multiplicity in each slot.
        let mut i = 0;
        loop {
            if i == counts.len() {
                return total;
            }
            if counts[i] < groups[i].1 {
                counts[i] += 1;
                break;
            }
            counts[i] = 0;
            i += 1;
        }
    }
}

/// `Π (1 - λ^{a_i}) · (1 - λ)^{-(d+1)}` up to `cutoff`, by series products.
pub fn froeberg_series(dt: &DegreeType, cutoff: usize) -> TruncatedSeries {
    let mut acc = TruncatedSeries::inv_one_minus_lambda_pow(dt.d() as usize + 1, cutoff)
        .expect("d + 1 >= 1");
    for &a in dt.degrees() {
        let factor = TruncatedSeries::one_minus_power(a as usize, cutoff).expect("degrees are positive");
        acc = acc.mul(&factor).expect("equal cutoffs");
    }
    acc
}

/// Pointwise `max(0, c)` of a series.
pub fn clip_nonneg(s: &TruncatedSeries) -> TruncatedSeries {
    s.clip_nonneg()
}

/// Fast evaluator for `F(m)` from the expanded numerator `Π (1 - λ^{a_i})`.
#[derive(Clone, Debug)]
pub struct FroebergFunction {
    d: i64,
    /// Non-zero numerator coefficients `(exponent, coefficient)`, ascending.
    numerator: Vec<(u64, BigInt)>,
}

impl FroebergFunction {
    pub fn new(dt: &DegreeType) -> Self {
        let mut poly: BTreeMap<u64, BigInt> = BTreeMap::from([(0, BigInt::one())]);
        for &a in dt.degrees() {
            let mut next = poly.clone();
            for (&e, c) in &poly {
                *next.entry(e + a as u64).or_insert_with(BigInt::zero) -= c;
            }
            next.retain(|_, c| !c.is_zero());
            poly = next;
        }
        Self {
            d: dt.d() as i64,
            numerator: poly.into_iter().collect(),
        }
    }

    pub fn value(&self, m: u64) -> BigInt {
        self.numerator
            .iter()
            .take_while(|(e, _)| *e <= m)
            .map(|(e, c)| c * binom(self.d + (m - e) as i64, self.d))
            .sum()
    }
}

/// Smallest `m` with `F(m) <= 0`; requires `n >= d + 1`.
pub fn smallest_zero(dt: &DegreeType) -> Result<u64> {
    dt.require_inclusion_bound()?;
    let f = FroebergFunction::new(dt);
    // Below the smallest degree F(m) = C(d + m, d) > 0.
    let start = *dt.degrees().last().expect("non-empty") as u64;
    let end = dt.total_degree() - dt.d() as u64;
    (start..=end)
        .find(|&m| f.value(m).sign() != Sign::Plus)
        .ok_or_else(|| unreachable_zero(dt))
}

fn unreachable_zero(dt: &DegreeType) -> Error {
    // F vanishes identically from Σa - d on when n >= d + 1.
    Error::InvalidDegreeType(format!("no zero of the Fröberg function found for {dt}"))
}

/// `F` tabulated over `0..=Σa - d` together with its smallest zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FroebergProfile {
    pub degree_type: DegreeType,
    pub values: Vec<BigInt>,
    pub m0: Option<u64>,
}

impl FroebergProfile {
    pub fn compute(dt: &DegreeType) -> Self {
        let f = FroebergFunction::new(dt);
        let end = dt.total_degree().saturating_sub(dt.d() as u64);
        let values: Vec<BigInt> = (0..=end).map(|m| f.value(m)).collect();
        let m0 = if dt.has_inclusion_bound() {
            values.iter().position(|v| v.sign() != Sign::Plus).map(|m| m as u64)
        } else {
            None
        };
        Self {
            degree_type: dt.clone(),
            values,
            m0,
        }
    }

    /// `F⁺ = max(0, F)` pointwise.
    pub fn clipped(&self) -> Vec<BigInt> {
        self.values
            .iter()
            .map(|v| if v.sign() == Sign::Minus { BigInt::zero() } else { v.clone() })
            .collect()
    }

    /// `F` up to its first non-positive value, zero afterwards.
    pub fn truncated(&self) -> Vec<BigInt> {
        let mut out = self.values.clone();
        if let Some(k) = out.iter().position(|v| v.sign() != Sign::Plus) {
            out[k..].iter_mut().for_each(|v| *v = BigInt::zero());
        }
        out
    }
}

/// Parameter case `n = d + 1`: `m0 = Σa - d`.
pub fn closed_form_parameter(dt: &DegreeType) -> Result<u64> {
    if dt.n() != dt.d() as usize + 1 {
        return Err(Error::Shape(format!("parameter case needs n = d + 1, got {dt}")));
    }
    Ok(dt.total_degree() - dt.d() as u64)
}

/// Almost-parameter case `n = d + 2` with constant degree `a`:
/// `m0 = floor(n(a - 1) / 2) + 1`.
pub fn closed_form_almost_parameter(dt: &DegreeType) -> Result<u64> {
    let a = dt
        .constant_degree()
        .filter(|_| dt.n() == dt.d() as usize + 2)
        .ok_or_else(|| Error::Shape(format!("almost-parameter case needs n = d + 2 equal degrees, got {dt}")))?;
    let n = dt.n() as u64;
    Ok(n * (a as u64 - 1) / 2 + 1)
}

/// `d = 1`, `n >= 2` generators of degree `a`: `m0 = ceil(na / (n - 1)) - 1`.
pub fn closed_form_dim1(n: u64, a: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::Shape(format!("d = 1 closed form needs n >= 2, got {n}")));
    }
    Ok((n * a).div_ceil(n - 1) - 1)
}

/// `d = 2`, `n >= 3` generators of degree `a`: `3a - 2` for `n = 3`, else the
/// ceiling of `(3 - 3n + 2an + sqrt(1 - 2n + n² + 4a²n)) / (2(n - 1))`,
/// evaluated without rounding.
pub fn closed_form_dim2(n: u64, a: u64) -> Result<u64> {
    if n < 3 {
        return Err(Error::Shape(format!("d = 2 closed form needs n >= 3, got {n}")));
    }
    if n == 3 {
        return Ok(3 * a - 2);
    }
    let (nb, ab) = (BigInt::from(n), BigInt::from(a));
    let linear = BigInt::from(3) - 3 * &nb + 2 * &ab * &nb;
    let disc = BigInt::one() - 2 * &nb + &nb * &nb + 4 * &ab * &ab * &nb;
    let denom = 2 * (&nb - 1);
    // m >= root  <=>  t = denom*m - linear >= 0 and t² >= disc.
    let holds = |m: &BigInt| {
        let t: BigInt = &denom * m - &linear;
        t.sign() != Sign::Minus && &t * &t >= disc
    };
    let s = disc.sqrt();
    let mut m = num_integer::Integer::div_floor(&(&linear + &s), &denom);
    while !holds(&m) {
        m += 1;
    }
    while m.sign() == Sign::Plus && holds(&(&m - 1)) {
        m -= 1;
    }
    Ok(u64::try_from(m).expect("root is non-negative"))
}

/// The real root `(3 - 3n + 2an + sqrt(1 - 2n + n² + 4a²n)) / (2(n - 1))`
/// of the quadratic piece of `F` on `[a, 2a - 1]` for `d = 2`, `n >= 4`.
pub fn real_root_dim2(n: u64, a: u64) -> Result<f64> {
    if n < 4 {
        return Err(Error::Shape(format!("real root formula needs n >= 4, got {n}")));
    }
    let (n, a) = (n as f64, a as f64);
    let disc = 1.0 - 2.0 * n + n * n + 4.0 * a * a * n;
    Ok((3.0 - 3.0 * n + 2.0 * a * n + disc.sqrt()) / (2.0 * (n - 1.0)))
}
