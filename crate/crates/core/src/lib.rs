//! Exact toolkit for the maximal genus of space curves in Range A.
//!
//! The numeric core (`range_genus`, `sequence_engine`, `planner`) is generic
//! over an exact integer type implementing [`Int`]; the aliases below fix it
//! to `BigInt` (the default everywhere) or `i128`.

pub mod cli;
pub mod error;
pub mod exact_linalg;
pub mod lemma_verifier;
pub mod range_genus;
pub mod planner;
pub mod postulation;
pub mod scalar;
pub mod sequence_engine;

pub use error::{Error, Result};
pub use scalar::Int;

/// Arbitrary-precision integer used by the CLI and the lemma verifier.
pub type Big = num_bigint::BigInt;

pub type BigParams = sequence_engine::BaseCurveParams<Big>;
pub type BigTable = sequence_engine::SequenceTable<Big>;
pub type BigUvTable = sequence_engine::UvTable<Big>;
pub type Params128 = sequence_engine::BaseCurveParams<i128>;
pub type Table128 = sequence_engine::SequenceTable<i128>;
pub type UvTable128 = sequence_engine::UvTable<i128>;
