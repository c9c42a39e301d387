//! Structured run reports: named results plus pass/fail checks.
//!
//! Identical inputs produce byte-identical reports except for the
//! `elapsed_ms` field, which golden comparisons must strip.

use serde::Serialize;

#[derive(Serialize)]
pub struct NamedValue {
    pub name: String,
    pub value: serde_json::Value,
}

#[derive(Serialize, Clone)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub expected: String,
    pub actual: String,
}

impl Check {
    pub fn compare(name: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        let expected = expected.to_string();
        let actual = actual.to_string();
        Check { name: name.into(), pass: expected == actual, expected, actual }
    }

    pub fn assert(name: impl Into<String>, pass: bool, detail: impl ToString) -> Self {
        Check { name: name.into(), pass, expected: "true".into(), actual: detail.to_string() }
    }
}

#[derive(Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs_digest: String,
    pub results: Vec<NamedValue>,
    pub checks: Vec<Check>,
    pub elapsed_ms: u128,
}

impl RunReport {
    pub fn new(command: impl Into<String>, inputs_digest: String) -> Self {
        RunReport {
            command: command.into(),
            inputs_digest,
            results: Vec::new(),
            checks: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn result(&mut self, name: impl Into<String>, value: impl Into<serde_json::Value>) {
        self.results.push(NamedValue { name: name.into(), value: value.into() });
    }

    pub fn check(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable report")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        out.push_str(&format!("inputs-digest: {}\n", self.inputs_digest));
        for r in &self.results {
            let rendered = match &r.value {
                serde_json::Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            out.push_str(&format!("{}: {}\n", r.name, rendered));
        }
        for c in &self.checks {
            if c.pass {
                out.push_str(&format!("check {}: PASS\n", c.name));
            } else {
                out.push_str(&format!(
                    "check {}: FAIL (expected = {}, actual = {})\n",
                    c.name, c.expected, c.actual
                ));
            }
        }
        out.push_str(&format!("elapsed-ms: {}\n", self.elapsed_ms));
        out
    }
}

/// Hex SHA-256 over the concatenated input documents.
pub fn digest(inputs: &[&str]) -> String {
    use sha2::{Digest, Sha256};
    let mut hasher = Sha256::new();
    for chunk in inputs {
        hasher.update(chunk.as_bytes());
    }
    let out = hasher.finalize();
    out.iter().map(|b| format!("{b:02x}")).collect()
}
