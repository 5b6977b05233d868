//! Combinatorial ground truth: memoized recurrence tables for the classical
//! sequences, and brute-force enumeration oracles that recount the same
//! quantities from raw set partitions and permutations.
//!
//! The tables are the fast route used by everything downstream; the census
//! is deliberately slow and independent, existing only to catch the tables
//! (and the formulas behind them) lying.

mod census;
mod tables;

pub use census::{
    oracle_census, CensusResult, EnumerationCaps, DEFAULT_PARTITION_CAP, DEFAULT_PERMUTATION_CAP,
};
pub use tables::Tables;

use thiserror::Error;

/// Errors from table lookups and enumeration requests.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CombinatError {
    /// Triangle lookups require `j <= m`.
    #[error("index out of range: j = {j} exceeds m = {m}")]
    IndexOutOfRange { m: usize, j: usize },
    /// Exhaustive enumeration refuses to run past its configured cap.
    #[error("n = {n} exceeds the enumeration cap {cap}")]
    EnumerationCapExceeded { n: usize, cap: usize },
}
