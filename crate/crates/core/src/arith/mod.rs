//! Exact integer, binomial, modular and truncated power-series arithmetic.

mod binom;
mod field;
mod rank;
mod series;

pub use binom::{binom, binom_usize};
pub use field::PrimeField;
pub use num_bigint::BigInt;
pub use rank::{fp_rank, Echelon};
pub use series::TruncatedSeries;
