//! The machine-readable report. Human text is rendered from it.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use qosc::check::Check;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl From<&Check> for CheckEntry {
    fn from(c: &Check) -> Self {
        CheckEntry {
            name: c.name.clone(),
            status: Status::from_bool(c.passed),
            detail: c.detail.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub status: Status,
    pub checks: Vec<CheckEntry>,
    pub tables: BTreeMap<String, Value>,
    pub timing_ms: u64,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            inputs: BTreeMap::new(),
            status: Status::Pass,
            checks: Vec::new(),
            tables: BTreeMap::new(),
            timing_ms: 0,
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) {
        self.inputs.insert(key.to_string(), value.into());
    }

    pub fn table(&mut self, key: &str, value: impl Into<Value>) {
        self.tables.insert(key.to_string(), value.into());
    }

    pub fn push_checks<'a>(&mut self, checks: impl IntoIterator<Item = &'a Check>) {
        self.checks.extend(checks.into_iter().map(CheckEntry::from));
        self.refresh_status();
    }

    /// A failure from a solver error rather than a residual.
    pub fn push_error(&mut self, name: &str, message: impl Into<String>) {
        self.checks.push(CheckEntry {
            name: name.to_string(),
            status: Status::Fail,
            detail: message.into(),
        });
        self.refresh_status();
    }

    fn refresh_status(&mut self) {
        self.status = Status::from_bool(self.checks.iter().all(|c| c.status == Status::Pass));
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn from_json(text: &str) -> Result<Report, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// The JSON document with the timing field zeroed, for comparisons.
    pub fn canonical_json(&self) -> String {
        let mut r = self.clone();
        r.timing_ms = 0;
        r.to_json()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("qosc {}: {}\n", self.command, self.status.as_str());
        for (k, v) in &self.inputs {
            let _ = writeln!(out, "  input {k} = {}", render(v));
        }
        for c in &self.checks {
            let _ = writeln!(out, "  {} {}: {}", c.status.as_str(), c.name, c.detail);
        }
        for (k, v) in &self.tables {
            let _ = writeln!(out, "  [{k}]");
            render_table(&mut out, v, 4);
        }
        let _ = writeln!(out, "  time {} ms", self.timing_ms);
        out
    }
}

fn render(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render_table(out: &mut String, v: &Value, indent: usize) {
    let pad = " ".repeat(indent);
    match v {
        Value::Array(items) => {
            for item in items {
                match item {
                    Value::Object(_) | Value::Array(_) => {
                        let _ = writeln!(out, "{pad}-");
                        render_table(out, item, indent + 2);
                    }
                    _ => {
                        let _ = writeln!(out, "{pad}{}", render(item));
                    }
                }
            }
        }
        Value::Object(map) => {
            for (k, item) in map {
                match item {
                    Value::Object(_) | Value::Array(_) => {
                        let _ = writeln!(out, "{pad}{k}:");
                        render_table(out, item, indent + 2);
                    }
                    _ => {
                        let _ = writeln!(out, "{pad}{k}: {}", render(item));
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", render(other));
        }
    }
}
