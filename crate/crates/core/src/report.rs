//! Structured outcomes of verification suites.
//!
//! A report is a list of clauses, each tied to the statement it checks via an
//! `anchor` tag. A clause carries a counterexample exactly when it failed. The
//! serialized form has a stable field order so two runs over the same input
//! differ only in `stats.wall_time_ms`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::budget::Sample;

pub const REPORT_FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clause {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    /// Number of instances evaluated.
    pub checked: usize,
    /// Instances whose preconditions could not be established.
    pub skipped: usize,
    pub sampled: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    pub morphisms_enumerated: usize,
    pub wall_time_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub format_version: u32,
    pub suite: String,
    pub instance: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sampling: Option<Sample>,
    pub clauses: Vec<Clause>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub verdicts: BTreeMap<String, bool>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub stats: Stats,
}

impl VerificationReport {
    /// True when no clause failed. Skipped clauses do not count as failures.
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.status != Status::Fail)
    }

    pub fn clause(&self, id: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(|c| c.status == Status::Fail)
    }

    /// Concatenates several reports under a new suite name.
    pub fn merge(suite: &str, reports: Vec<VerificationReport>) -> VerificationReport {
        let mut out = VerificationReport {
            format_version: REPORT_FORMAT_VERSION,
            suite: suite.to_owned(),
            instance: String::new(),
            sampling: None,
            clauses: Vec::new(),
            verdicts: BTreeMap::new(),
            notes: Vec::new(),
            stats: Stats {
                morphisms_enumerated: 0,
                wall_time_ms: 0,
            },
        };
        for r in reports {
            if out.instance.is_empty() {
                out.instance = r.instance;
            }
            out.sampling = out.sampling.or(r.sampling);
            out.clauses.extend(r.clauses);
            out.verdicts.extend(r.verdicts);
            out.notes.extend(r.notes);
            out.stats.morphisms_enumerated = out
                .stats
                .morphisms_enumerated
                .max(r.stats.morphisms_enumerated);
            out.stats.wall_time_ms += r.stats.wall_time_ms;
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization is infallible")
    }

    /// Copy with the timing field zeroed, for byte-level comparisons.
    pub fn without_timing(&self) -> VerificationReport {
        let mut r = self.clone();
        r.stats.wall_time_ms = 0;
        r
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "suite {} on {}", self.suite, self.instance);
        if let Some(sample) = &self.sampling {
            let _ = writeln!(
                s,
                "sampled: {} subjects, seed {}",
                sample.count, sample.seed
            );
        }
        for c in &self.clauses {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            let _ = write!(
                s,
                "{tag}  {:<40} [{}] checked={}",
                c.id, c.anchor, c.checked
            );
            if c.skipped > 0 {
                let _ = write!(s, " skipped={}", c.skipped);
            }
            if let Some(w) = &c.counterexample {
                let _ = write!(s, "\n      counterexample: {w}");
            }
            s.push('\n');
        }
        for (k, v) in &self.verdicts {
            let _ = writeln!(s, "verdict {k}: {v}");
        }
        for n in &self.notes {
            let _ = writeln!(s, "note: {n}");
        }
        let _ = writeln!(
            s,
            "{} clauses, {} failed, {} morphisms, {} ms",
            self.clauses.len(),
            self.failures().count(),
            self.stats.morphisms_enumerated,
            self.stats.wall_time_ms
        );
        s
    }
}

/// Accumulates the evaluations of one clause. The first failing evaluation
/// in enumeration order becomes the counterexample.
#[derive(Debug)]
pub struct ClauseCheck {
    id: String,
    anchor: String,
    checked: usize,
    skipped: usize,
    counterexample: Option<String>,
}

impl ClauseCheck {
    pub fn new(id: impl Into<String>, anchor: impl Into<String>) -> Self {
        ClauseCheck {
            id: id.into(),
            anchor: anchor.into(),
            checked: 0,
            skipped: 0,
            counterexample: None,
        }
    }

    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(witness());
        }
    }

    pub fn fail(&mut self, witness: impl Into<String>) {
        self.record(false, || witness.into());
    }

    pub fn skip(&mut self) {
        self.skipped += 1;
    }

    pub fn is_failed(&self) -> bool {
        self.counterexample.is_some()
    }

    fn finish(self, sampled: bool) -> Clause {
        let status = if self.counterexample.is_some() {
            Status::Fail
        } else if self.checked == 0 {
            Status::Skipped
        } else {
            Status::Pass
        };
        Clause {
            id: self.id,
            anchor: self.anchor,
            status,
            checked: self.checked,
            skipped: self.skipped,
            sampled,
            counterexample: self.counterexample,
        }
    }
}

pub(crate) struct ReportBuilder {
    suite: String,
    instance: String,
    sampling: Option<Sample>,
    start: Instant,
    clauses: Vec<Clause>,
    verdicts: BTreeMap<String, bool>,
    notes: Vec<String>,
    morphisms: usize,
}

impl ReportBuilder {
    pub(crate) fn new(suite: &str, instance: &str, sampling: Option<Sample>) -> Self {
        ReportBuilder {
            suite: suite.to_owned(),
            instance: instance.to_owned(),
            sampling,
            start: Instant::now(),
            clauses: Vec::new(),
            verdicts: BTreeMap::new(),
            notes: Vec::new(),
            morphisms: 0,
        }
    }

    pub(crate) fn push(&mut self, check: ClauseCheck) {
        let sampled = self.sampling.is_some();
        self.clauses.push(check.finish(sampled));
    }

    pub(crate) fn extend(&mut self, checks: impl IntoIterator<Item = ClauseCheck>) {
        for c in checks {
            self.push(c);
        }
    }

    pub(crate) fn verdict(&mut self, name: &str, value: bool) {
        self.verdicts.insert(name.to_owned(), value);
    }

    pub(crate) fn note(&mut self, note: String) {
        self.notes.push(note);
    }

    pub(crate) fn morphisms(&mut self, n: usize) {
        self.morphisms = self.morphisms.max(n);
    }

    pub(crate) fn finish(self) -> VerificationReport {
        VerificationReport {
            format_version: REPORT_FORMAT_VERSION,
            suite: self.suite,
            instance: self.instance,
            sampling: self.sampling,
            clauses: self.clauses,
            verdicts: self.verdicts,
            notes: self.notes,
            stats: Stats {
                morphisms_enumerated: self.morphisms,
                wall_time_ms: self.start.elapsed().as_millis() as u64,
            },
        }
    }
}
