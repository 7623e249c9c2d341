use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::binom;
use crate::error::{Error, Result};

/// Integer power series `sum c_m λ^m` kept up to a cutoff degree `N`.
///
/// Always holds exactly `N + 1` coefficients; products drop anything past `N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument("a series needs at least one coefficient".into()));
        }
        Ok(Self { coeffs })
    }

    pub fn from_i64s(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(cutoff: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); cutoff + 1],
        }
    }

    /// The constant series `1`.
    pub fn unit(cutoff: usize) -> Self {
        let mut s = Self::zero(cutoff);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// `1 - λ^a`.
    pub fn one_minus_power(a: usize, cutoff: usize) -> Result<Self> {
        if a == 0 {
            return Err(Error::InvalidArgument("exponent a must be >= 1".into()));
        }
        let mut s = Self::unit(cutoff);
        if a <= cutoff {
            s.coeffs[a] = BigInt::from(-1);
        }
        Ok(s)
    }

    /// `(1 - λ)^{-e}`, whose coefficient at `m` is `C(e - 1 + m, e - 1)`.
    pub fn inv_one_minus_lambda_pow(e: usize, cutoff: usize) -> Result<Self> {
        if e == 0 {
            return Err(Error::InvalidArgument("exponent e must be >= 1".into()));
        }
        let k = e as i64 - 1;
        Ok(Self {
            coeffs: (0..=cutoff as i64).map(|m| binom(k + m, k)).collect(),
        })
    }

    pub fn cutoff(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, m: usize) -> Option<&BigInt> {
        self.coeffs.get(m)
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Cauchy product truncated at the shared cutoff.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cutoff() != other.cutoff() {
            return Err(Error::CutoffMismatch {
                left: self.cutoff(),
                right: other.cutoff(),
            });
        }
        let n = self.coeffs.len();
        let mut out = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(Self { coeffs: out })
    }

    /// Coefficient-wise `max(0, c)`.
    pub fn clip_nonneg(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| if c.sign() == num_bigint::Sign::Minus { BigInt::zero() } else { c.clone() })
                .collect(),
        }
    }

    /// Keep the coefficients before the first non-positive one and zero the rest.
    pub fn truncate_at_first_nonpositive(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        if let Some(k) = coeffs.iter().position(|c| c.sign() != num_bigint::Sign::Plus) {
            for c in &mut coeffs[k..] {
                *c = BigInt::zero();
            }
        }
        Self { coeffs }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(c: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_i64s(c).unwrap()
    }

    #[test]
    fn one_minus_power() {
        assert_eq!(TruncatedSeries::one_minus_power(2, 3).unwrap(), s(&[1, 0, -1, 0]));
        assert_eq!(TruncatedSeries::one_minus_power(1, 2).unwrap(), s(&[1, -1, 0]));
        assert_eq!(TruncatedSeries::one_minus_power(5, 3).unwrap(), s(&[1, 0, 0, 0]));
        assert!(TruncatedSeries::one_minus_power(0, 3).is_err());
    }

    #[test]
    fn inverse_powers() {
        assert_eq!(TruncatedSeries::inv_one_minus_lambda_pow(1, 3).unwrap(), s(&[1, 1, 1, 1]));
        assert_eq!(TruncatedSeries::inv_one_minus_lambda_pow(3, 3).unwrap(), s(&[1, 3, 6, 10]));
        assert_eq!(TruncatedSeries::inv_one_minus_lambda_pow(2, 0).unwrap(), s(&[1]));
    }

    #[test]
    fn products() {
        assert_eq!(s(&[1, 1]).mul(&s(&[1, -1])).unwrap(), s(&[1, 0]));
        assert_eq!(s(&[1, 2, 1]).mul(&s(&[1, 1, 1])).unwrap(), s(&[1, 3, 4]));
        let x = s(&[3, -1, 4, 1]);
        assert_eq!(x.mul(&TruncatedSeries::unit(3)).unwrap(), x);
        assert_eq!(
            s(&[1, 2]).mul(&s(&[1, 2, 3])),
            Err(Error::CutoffMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn clipping_conventions() {
        assert_eq!(s(&[1, 3, -2, 4]).clip_nonneg(), s(&[1, 3, 0, 4]));
        assert_eq!(s(&[1, 3, 2]).clip_nonneg(), s(&[1, 3, 2]));
        assert_eq!(s(&[-1]).clip_nonneg(), s(&[0]));
        assert_eq!(s(&[1, 3, -2, 4]).truncate_at_first_nonpositive(), s(&[1, 3, 0, 0]));
        assert_eq!(s(&[1, 0, 2]).truncate_at_first_nonpositive(), s(&[1, 0, 0]));
    }

    fn series(len: usize) -> impl Strategy<Value = TruncatedSeries> {
        proptest::collection::vec(-50i64..50, len).prop_map(|c| s(&c))
    }

    proptest! {
        #[test]
        fn mul_is_commutative_and_associative(
            (a, b, c) in (1usize..8).prop_flat_map(|n| (series(n), series(n), series(n)))
        ) {
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        }

        #[test]
        fn inverse_power_cancels(e in 1usize..7, cutoff in 0usize..12) {
            let mut acc = TruncatedSeries::inv_one_minus_lambda_pow(e, cutoff).unwrap();
            for _ in 0..e {
                acc = acc.mul(&TruncatedSeries::one_minus_power(1, cutoff).unwrap()).unwrap();
            }
            prop_assert_eq!(acc, TruncatedSeries::unit(cutoff));
        }
    }
}
