use num_bigint::Sign;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::arith::PrimeField;
use crate::froeberg::{DegreeType, FroebergFunction};
use crate::{Error, Result};

use super::form::FormSystem;
use super::hilbert::hilbert_value;
use super::sample::{derived_seed, FormSampler};

/// `F⁺` as a Hilbert-function lower bound: `F(m)` up to the first
/// non-positive value and zero from there on.
pub fn froeberg_lower_bound(dt: &DegreeType, up_to: u64) -> Vec<u64> {
    let f = FroebergFunction::new(dt);
    let mut out = Vec::with_capacity(up_to as usize + 1);
    let mut vanished = false;
    for m in 0..=up_to {
        let v = if vanished { None } else { Some(f.value(m)) };
        match v {
            Some(v) if v.sign() == Sign::Plus => out.push(v.to_u64().expect("F(m) <= dim P_m")),
            _ => {
                vanished = true;
                out.push(0);
            }
        }
    }
    out
}

/// Last degree any trial needs to look at.
fn window(dt: &DegreeType) -> u64 {
    let total = dt.total_degree();
    if dt.has_inclusion_bound() {
        total + 1 - dt.d() as u64
    } else {
        total
    }
}

/// One random system of the degree type and its Hilbert function.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrialRecord {
    pub trial: usize,
    pub seed: u64,
    /// `H(0..=N)` where `N` is where both `H` and the prediction vanished,
    /// or the end of the search window.
    pub hilbert: Vec<u64>,
    pub first_zero: Option<u64>,
    /// Degrees with `H(m) < F⁺(m)`.
    pub violations: Vec<u64>,
    pub equals_prediction: bool,
}

/// The system drawn for `trial` under master seed `seed`.
pub fn trial_system(dt: &DegreeType, field: PrimeField, seed: u64, trial: usize) -> FormSystem {
    FormSampler::new(derived_seed(seed, trial)).system(field, dt.d() as usize + 1, dt.degrees())
}

pub fn froeberg_trial(dt: &DegreeType, field: PrimeField, seed: u64, trial: usize) -> TrialRecord {
    let system = trial_system(dt, field, seed, trial);
    let end = window(dt);
    let predicted = froeberg_lower_bound(dt, end);
    let predicted_zero = predicted.iter().position(|&v| v == 0).map(|m| m as u64);
    let mut hilbert = Vec::new();
    let mut first_zero = None;
    for m in 0..=end {
        let h = if first_zero.is_some() {
            0
        } else {
            hilbert_value(&system, m as u32)
        };
        if h == 0 && first_zero.is_none() {
            first_zero = Some(m);
        }
        hilbert.push(h);
        if first_zero.is_some() && predicted_zero.is_some_and(|z| m >= z) {
            break;
        }
    }
    let violations: Vec<u64> = hilbert
        .iter()
        .zip(&predicted)
        .enumerate()
        .filter(|(_, (h, f))| h < f)
        .map(|(m, _)| m as u64)
        .collect();
    let equals_prediction = hilbert.iter().zip(&predicted).all(|(h, f)| h == f);
    TrialRecord {
        trial,
        seed: derived_seed(seed, trial),
        hilbert,
        first_zero,
        violations,
        equals_prediction,
    }
}

/// Aggregate of repeated random trials against the Fröberg prediction.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FroebergCheckReport {
    pub degree_type: DegreeType,
    pub p: u32,
    pub seed: u64,
    pub trials: usize,
    pub predicted: Vec<u64>,
    pub m0: Option<u64>,
    pub inequality_violations: usize,
    pub equality_count: usize,
    pub equality_rate: f64,
    pub first_zeros: Vec<Option<u64>>,
    pub per_trial: Vec<TrialRecord>,
}

impl FroebergCheckReport {
    /// Combines trial records, which are sorted by trial index first.
    pub fn from_trials(dt: &DegreeType, field: PrimeField, seed: u64, mut records: Vec<TrialRecord>) -> Self {
        records.sort_by_key(|r| r.trial);
        let predicted = froeberg_lower_bound(dt, window(dt));
        let m0 = if dt.has_inclusion_bound() {
            predicted.iter().position(|&v| v == 0).map(|m| m as u64)
        } else {
            None
        };
        let equality_count = records.iter().filter(|r| r.equals_prediction).count();
        Self {
            degree_type: dt.clone(),
            p: field.modulus(),
            seed,
            trials: records.len(),
            predicted,
            m0,
            inequality_violations: records.iter().map(|r| r.violations.len()).sum(),
            equality_count,
            equality_rate: equality_count as f64 / records.len().max(1) as f64,
            first_zeros: records.iter().map(|r| r.first_zero).collect(),
            per_trial: records,
        }
    }

    pub fn passed(&self) -> bool {
        self.inequality_violations == 0
    }
}

/// Runs `trials` independent draws sequentially.
pub fn froeberg_check(dt: &DegreeType, field: PrimeField, trials: usize, seed: u64) -> Result<FroebergCheckReport> {
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    let records = (0..trials).map(|t| froeberg_trial(dt, field, seed, t)).collect();
    Ok(FroebergCheckReport::from_trials(dt, field, seed, records))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }

    #[test]
    fn lower_bound_truncates_after_first_zero() {
        let dt = DegreeType::constant(2, 6, 10).unwrap();
        let lb = froeberg_lower_bound(&dt, 40);
        assert_eq!(lb[15], 10);
        assert!(lb[16..].iter().all(|&v| v == 0));
    }

    #[test]
    fn small_cases_match() {
        for (d, degrees) in [(1, vec![2, 2, 2]), (2, vec![2, 2, 2, 2]), (2, vec![3, 2, 2, 1]), (1, vec![3, 3])] {
            let dt = DegreeType::new(d, degrees).unwrap();
            let r = froeberg_check(&dt, field(), 5, 99).unwrap();
            assert!(r.passed());
            assert_eq!(r.equality_rate, 1.0, "{dt}");
        }
    }

    #[test]
    fn complete_intersection_series_for_few_forms() {
        // n <= d + 1: forms are a regular sequence and H is the full series.
        let dt = DegreeType::new(2, vec![2, 3]).unwrap();
        let r = froeberg_check(&dt, field(), 3, 1).unwrap();
        assert_eq!(r.equality_rate, 1.0);
        assert_eq!(r.m0, None);
        assert_eq!(&r.predicted[..6], &[1, 3, 5, 6, 6, 6]);
    }

    #[test]
    fn small_field_never_violates() {
        let f2 = PrimeField::new(2).unwrap();
        let dt = DegreeType::constant(2, 4, 2).unwrap();
        let r = froeberg_check(&dt, f2, 30, 3).unwrap();
        assert_eq!(r.inequality_violations, 0);
    }

    #[test]
    fn deterministic_and_order_independent() {
        let dt = DegreeType::constant(1, 3, 4).unwrap();
        let a = froeberg_check(&dt, field(), 4, 5).unwrap();
        let mut recs: Vec<_> = (0..4).rev().map(|t| froeberg_trial(&dt, field(), 5, t)).collect();
        recs.reverse();
        assert_eq!(a, FroebergCheckReport::from_trials(&dt, field(), 5, recs));
        assert!(froeberg_check(&dt, field(), 0, 5).is_err());
    }
}
