//! Generic degree bounds for Frobenius closure and tight closure.
//!
//! The crate computes the Fröberg function of a degree type and its smallest
//! zero `m0`, turns `m0` into inclusion bounds for ideals, Frobenius closure
//! and tight closure, and checks the predictions with exact linear algebra
//! over prime fields.

pub mod arith;
mod error;
pub mod bounds;
pub mod froeberg;
pub mod macaulay;
pub mod quotient;

pub use error::{Error, Result};
