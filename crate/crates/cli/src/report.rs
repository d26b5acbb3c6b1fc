//! Reports: the deterministic record of a run.

use std::collections::BTreeMap;

use catbf_core::catbernstein::CheckRecord;
use serde::{Deserialize, Serialize};

/// A task that was not run because a cap would be exceeded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skip {
    pub task: String,
    pub reason: String,
}

/// Holds only values derived from the command's inputs, never timings, paths or cache state.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub records: Vec<CheckRecord>,
    pub skipped: Vec<Skip>,
    pub checked: usize,
    pub failed: usize,
    pub pass: bool,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Report {
        Report { command: command.into(), pass: true, ..Default::default() }
    }

    pub fn param(&mut self, k: &str, v: impl ToString) {
        self.parameters.insert(k.into(), v.to_string());
    }

    pub fn push(&mut self, r: CheckRecord) {
        self.checked += 1;
        if !r.pass {
            self.failed += 1;
            self.pass = false;
        }
        self.records.push(r);
    }

    pub fn extend(&mut self, rs: impl IntoIterator<Item = CheckRecord>) {
        for r in rs {
            self.push(r);
        }
    }

    pub fn skip(&mut self, task: impl Into<String>, reason: impl ToString) {
        self.skipped.push(Skip { task: task.into(), reason: reason.to_string() });
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let tag = if r.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("{tag} {} [{}]: expected {}, computed {}\n", r.name, r.parameters, r.expected, r.computed));
        }
        for s in &self.skipped {
            out.push_str(&format!("SKIP {}: {}\n", s.task, s.reason));
        }
        out.push_str(&format!(
            "{}: {} checks, {} failed, {} skipped: {}\n",
            self.command,
            self.checked,
            self.failed,
            self.skipped.len(),
            if self.pass { "pass" } else { "FAIL" }
        ));
        out
    }
}
