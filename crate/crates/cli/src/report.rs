//! The report envelope shared by every subcommand, and its three
//! serializations (text, JSON, CSV).
//!
//! Every integer in a report is rendered as a decimal string: several of the
//! values involved (Bell numbers past `B_25`, derangement numbers at the
//! sweep bounds) overflow any native numeric type a consumer might parse
//! into. The only native numbers are the counts in `summary`.

use std::collections::BTreeMap;
use std::time::Duration;

use serde::Serialize;
use ucl_core::congruence::{Rendered, Status, SuiteReport, Summary, Verdict};

/// Output format for every subcommand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// One complete run: what was asked, what was checked, what came of it.
#[derive(Serialize)]
pub struct Report {
    /// Tool name and version, e.g. `ucl 0.1.0`.
    pub tool: String,
    /// The subcommand that produced this report.
    pub command: &'static str,
    /// The fully-resolved configuration, every value a decimal string or
    /// keyword.
    pub config: BTreeMap<&'static str, String>,
    pub verdicts: Vec<Verdict>,
    pub counterexamples: Vec<Verdict>,
    pub summary: Summary,
    /// Wall-clock time. Deliberately absent from the text and CSV surfaces
    /// so identical configurations produce byte-identical output there.
    pub elapsed_ms: u128,
}

impl Report {
    pub fn new(
        command: &'static str,
        config: BTreeMap<&'static str, String>,
        suite: SuiteReport,
        elapsed: Duration,
    ) -> Self {
        let summary = suite.summary();
        let counterexamples = suite.counterexamples();
        Report {
            tool: format!("ucl {}", env!("CARGO_PKG_VERSION")),
            command,
            config,
            verdicts: suite.verdicts,
            counterexamples,
            summary,
            elapsed_ms: elapsed.as_millis(),
        }
    }

    /// 0 when nothing failed, 1 when any verdict is a counterexample.
    /// (Usage errors exit 2 before a report exists.)
    pub fn exit_code(&self) -> i32 {
        if self.summary.fails > 0 {
            1
        } else {
            0
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::Json => self.render_json(),
            Format::Csv => self.render_csv(),
        }
    }

    fn render_json(&self) -> String {
        let mut body = serde_json::to_string_pretty(self).expect("report serializes");
        body.push('\n');
        body
    }

    fn render_text(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        writeln!(out, "{} {}", self.tool, self.command).unwrap();
        let config: Vec<String> = self
            .config
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        writeln!(out, "config: {}", config.join(" ")).unwrap();
        for v in &self.verdicts {
            write!(
                out,
                "{:<8} {} {}",
                v.status.as_str(),
                v.check_id,
                v.params.to_flat_string()
            )
            .unwrap();
            if v.status != Status::Excluded {
                write!(out, " lhs={} rhs={}", v.lhs, v.rhs).unwrap();
            }
            if let Some(note) = &v.note {
                write!(out, " ({note})").unwrap();
            }
            out.push('\n');
        }
        writeln!(
            out,
            "summary: total={} holds={} fails={} excluded={}",
            self.summary.total, self.summary.holds, self.summary.fails, self.summary.excluded
        )
        .unwrap();
        out
    }

    fn render_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["check_id", "params", "holds", "lhs", "rhs"])
            .expect("in-memory write");
        for v in &self.verdicts {
            w.write_record([
                v.check_id,
                &v.params.to_flat_string(),
                holds_cell(v.status),
                &csv_cell(&v.lhs),
                &csv_cell(&v.rhs),
            ])
            .expect("in-memory write");
        }
        let bytes = w.into_inner().expect("in-memory flush");
        String::from_utf8(bytes).expect("csv output is UTF-8")
    }
}

/// The CSV `holds` column distinguishes out-of-scope cells from refuted
/// ones; collapsing `excluded` into `false` would misread a sweep.
fn holds_cell(status: Status) -> &'static str {
    match status {
        Status::Holds => "true",
        Status::Fails => "false",
        Status::Excluded => "excluded",
    }
}

/// Coefficient vectors flatten with semicolons so they survive a CSV cell.
fn csv_cell(rendered: &Rendered) -> String {
    match rendered {
        Rendered::Value(v) => v.clone(),
        Rendered::Coefficients(cs) => cs.join(";"),
    }
}
