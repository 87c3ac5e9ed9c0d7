//! Exact arithmetic over GF(p) and dense linear algebra on top of it.

mod field;
mod matrix;

pub use field::{is_prime_u64, PrimeField, DEFAULT_PRIME};
pub use matrix::FieldMatrix;
