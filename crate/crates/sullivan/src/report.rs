//! Report entries and their JSON and text renderings.
//!
//! JSON layout:
//!
//! ```text
//! {
//!   "entries": [
//!     { "id": "...", "operation": "...", "inputs": {...},
//!       "verdict": "...", "witnesses": ["..."], "citation": "..." }
//!   ],
//!   "mismatches": ["<id>", ...]
//! }
//! ```
//!
//! `mismatches` lists entries whose verdict differs from the expected one.
//! Entries with verdict `informational` or `flagged` are never mismatches.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Entry {
    pub id: String,
    pub operation: String,
    pub inputs: Value,
    pub verdict: String,
    pub witnesses: Vec<String>,
    pub citation: String,
}

impl Entry {
    pub fn new(id: impl Into<String>, operation: &str, inputs: Value, verdict: impl Into<String>) -> Self {
        Entry {
            id: id.into(),
            operation: operation.to_string(),
            inputs,
            verdict: verdict.into(),
            witnesses: Vec::new(),
            citation: String::new(),
        }
    }

    pub fn witnesses(mut self, w: impl IntoIterator<Item = String>) -> Self {
        self.witnesses.extend(w);
        self
    }

    pub fn cite(mut self, c: &str) -> Self {
        self.citation = c.to_string();
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Report {
    pub entries: Vec<Entry>,
    pub mismatches: Vec<String>,
}

impl Report {
    /// Adds an entry; when `expected` is given and differs from the verdict
    /// the id is recorded as a mismatch.
    pub fn push(&mut self, entry: Entry, expected: Option<&str>) {
        if let Some(e) = expected {
            if entry.verdict != e {
                self.mismatches.push(entry.id.clone());
            }
        }
        self.entries.push(entry);
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
        self.mismatches.extend(other.mismatches);
    }

    pub fn entry(&self, id: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let _ = writeln!(out, "{:<14} {}", e.verdict, e.id);
            if let Value::Object(map) = &e.inputs {
                if !map.is_empty() {
                    let parts: Vec<String> = map.iter().map(|(k, v)| format!("{}={}", k, compact(v))).collect();
                    let _ = writeln!(out, "               {}: {}", e.operation, parts.join(" "));
                }
            }
            for w in &e.witnesses {
                let _ = writeln!(out, "               - {}", w);
            }
            if !e.citation.is_empty() {
                let _ = writeln!(out, "               [{}]", e.citation);
            }
        }
        let _ = writeln!(out, "\n{} entries, {} mismatches", self.entries.len(), self.mismatches.len());
        for m in &self.mismatches {
            let _ = writeln!(out, "mismatch: {}", m);
        }
        out
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
