//! Hilbert functions of ideals generated by forms, computed from ranks of
//! Macaulay matrices over `F_p`.

mod check;
mod form;
mod hilbert;
mod monomial;
mod sample;
pub mod text;

pub use check::{froeberg_check, froeberg_lower_bound, froeberg_trial, trial_system, FroebergCheckReport, TrialRecord};
pub use form::{Form, FormSystem};
pub use hilbert::{first_inclusion_degree, hilbert_table, hilbert_value, DegreeSpan, HilbertTable};
pub use monomial::{count_monomials, monomials_of_degree, Monomial, MonomialIndex};
pub use sample::{derived_seed, random_form, FormSampler};
pub use text::{parse_system, write_system};
