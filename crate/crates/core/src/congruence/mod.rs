//! Identity and congruence verification: checkers, verdicts, and suites.
//!
//! Every checker computes both sides of one stated identity or congruence
//! and reports a [`Verdict`]. Exact identities are compared as canonical
//! integer polynomials (or integers). Congruences modulo a prime `p` are
//! compared as canonical `F_p` coefficient vectors, and each side is
//! accumulated along two arithmetic routes — exact big integers reduced at
//! the end, and arithmetic carried in `F_p` throughout — which must agree
//! before a verdict may hold (see [`dual`]).
//!
//! Checkers never panic on in-domain input and never silently skip: cells
//! where a congruence's own hypothesis fails (for instance `p` dividing the
//! index whose negation must be inverted) come back [`Status::Excluded`]
//! with a note saying why.

mod checkers;
mod dual;
mod suite;

pub use checkers::{
    verify_alternating_bell_sum, verify_bell_block_sum, verify_bell_derangement_link,
    verify_bell_derangement_numbers, verify_bell_pminus1, verify_bell_shift, verify_census,
    verify_derangement_periodicity, verify_lagrange, verify_shifted_bell_sums, verify_spivey,
    verify_stirling_orthogonality, verify_sun_zagier, verify_sun_zagier_numbers,
    verify_sun_zagier_poly, verify_touchard_family,
};
pub use suite::{run_suite, sweep_constant, sweep_expected_constant, SuiteConfig, SuiteKind};

use std::collections::BTreeMap;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use thiserror::Error;

/// Errors for checker calls outside their stated domain.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CongruenceError {
    /// The requested index must be at least 1.
    #[error("index m must be at least 1")]
    IndexTooSmall,
}

/// Outcome of one checked instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    /// Both sides agreed (and, for congruences, both arithmetic routes did).
    Holds,
    /// The sides disagreed — a counterexample.
    Fails,
    /// The instance is outside the statement's hypotheses and was not judged.
    Excluded,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::Excluded => "excluded",
        }
    }
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

/// One side of a verdict, rendered exactly: a single integer (or residue)
/// as a decimal string, or a coefficient vector of decimal strings with the
/// constant term first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Rendered {
    Value(String),
    Coefficients(Vec<String>),
}

impl Rendered {
    /// Placeholder for sides that were never computed (excluded instances).
    fn skipped() -> Self {
        Rendered::Value("-".to_string())
    }
}

impl std::fmt::Display for Rendered {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Rendered::Value(v) => write!(f, "{v}"),
            Rendered::Coefficients(cs) => write!(f, "[{}]", cs.join(",")),
        }
    }
}

/// The named integer parameters identifying one checked instance, ordered
/// by name. Values serialize as decimal strings like every other integer in
/// a report.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Params(BTreeMap<&'static str, i64>);

impl Params {
    pub fn new() -> Self {
        Params::default()
    }

    pub fn with(mut self, name: &'static str, value: i64) -> Self {
        self.0.insert(name, value);
        self
    }

    pub fn get(&self, name: &str) -> Option<i64> {
        self.0.get(name).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static str, i64)> + '_ {
        self.0.iter().map(|(&k, &v)| (k, v))
    }

    /// `name=value` pairs joined by `;`, the flat form used in CSV rows.
    pub fn to_flat_string(&self) -> String {
        self.0
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }
}

impl Serialize for Params {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, &v.to_string())?;
        }
        map.end()
    }
}

/// The result of checking one instance of one identity or congruence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    /// Stable machine-readable name of the check.
    pub check_id: &'static str,
    /// The instance parameters (indices and modulus).
    pub params: Params,
    pub status: Status,
    pub lhs: Rendered,
    pub rhs: Rendered,
    /// Extra context: why an instance was excluded, or what diagnostic a
    /// failure carries.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Verdict {
    /// Judges two fully-rendered sides. `consistent` reports whether every
    /// dual-route accumulation behind the sides settled cleanly; when it is
    /// false the verdict fails regardless of the comparison, because one of
    /// the sides cannot be trusted.
    pub(crate) fn from_comparison(
        check_id: &'static str,
        params: Params,
        lhs: Rendered,
        rhs: Rendered,
        consistent: bool,
    ) -> Self {
        let (status, note) = if !consistent {
            (
                Status::Fails,
                Some("arithmetic routes disagreed; sides untrustworthy".to_string()),
            )
        } else if lhs == rhs {
            (Status::Holds, None)
        } else {
            (Status::Fails, None)
        };
        Verdict {
            check_id,
            params,
            status,
            lhs,
            rhs,
            note,
        }
    }

    /// Wraps a single computed value as a trivially-holding verdict, so that
    /// one-shot evaluations flow through the same report pipeline as suite
    /// runs (both sides carry the value).
    pub fn computed(check_id: &'static str, params: Params, value: Rendered) -> Self {
        Verdict {
            check_id,
            params,
            status: Status::Holds,
            lhs: value.clone(),
            rhs: value,
            note: None,
        }
    }

    /// Marks an instance as outside the statement's hypotheses.
    pub(crate) fn excluded(check_id: &'static str, params: Params, why: impl Into<String>) -> Self {
        Verdict {
            check_id,
            params,
            status: Status::Excluded,
            lhs: Rendered::skipped(),
            rhs: Rendered::skipped(),
            note: Some(why.into()),
        }
    }

    pub fn holds(&self) -> bool {
        self.status == Status::Holds
    }
}

/// Aggregate counts over a batch of verdicts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub holds: usize,
    pub fails: usize,
    pub excluded: usize,
}

/// An ordered batch of verdicts from one suite run.
///
/// Verdicts are sorted by `(check_id, params)` so that a report's byte
/// content depends only on its inputs, never on generation order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub verdicts: Vec<Verdict>,
}

impl SuiteReport {
    pub fn from_verdicts(mut verdicts: Vec<Verdict>) -> Self {
        verdicts.sort_by(|a, b| {
            a.check_id
                .cmp(b.check_id)
                .then_with(|| a.params.cmp(&b.params))
        });
        SuiteReport { verdicts }
    }

    pub fn summary(&self) -> Summary {
        let mut s = Summary {
            total: self.verdicts.len(),
            ..Summary::default()
        };
        for v in &self.verdicts {
            match v.status {
                Status::Holds => s.holds += 1,
                Status::Fails => s.fails += 1,
                Status::Excluded => s.excluded += 1,
            }
        }
        s
    }

    /// The failing verdicts, in report order.
    pub fn counterexamples(&self) -> Vec<Verdict> {
        self.verdicts
            .iter()
            .filter(|v| v.status == Status::Fails)
            .cloned()
            .collect()
    }

    /// True when nothing failed (excluded instances are not failures).
    pub fn all_hold(&self) -> bool {
        self.verdicts.iter().all(|v| v.status != Status::Fails)
    }

    /// Merges another report into this one, re-sorting.
    pub fn merge(self, other: SuiteReport) -> Self {
        let mut verdicts = self.verdicts;
        verdicts.extend(other.verdicts);
        SuiteReport::from_verdicts(verdicts)
    }
}
