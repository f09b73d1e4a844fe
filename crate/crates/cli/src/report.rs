//! Structured verification reports.
//!
//! The JSON schema is stable: top-level keys `command`, `parameters`,
//! `checks`, `depthsUsed`, `wallTime`; each check carries a comparison mode
//! (`exact`, `digits:N` or `upToSign`) and a pass flag.

use std::time::Instant;

use serde::Serialize;

/// How a check compares expected against actual.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    Exact,
    Digits(u32),
    UpToSign,
}

impl Serialize for Comparison {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Comparison::Exact => s.serialize_str("exact"),
            Comparison::Digits(d) => s.serialize_str(&format!("digits:{d}")),
            Comparison::UpToSign => s.serialize_str("upToSign"),
        }
    }
}

/// One verified fact.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub digits: Option<u32>,
    pub mode: Comparison,
    pub pass: bool,
}

/// A command's structured outcome.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub parameters: Vec<(String, String)>,
    pub checks: Vec<Check>,
    #[serde(rename = "depthsUsed")]
    pub depths_used: Vec<u64>,
    #[serde(rename = "wallTime")]
    pub wall_time: f64,
}

/// Builder that accumulates checks and timing.
pub struct ReportBuilder {
    report: Report,
    started: Instant,
}

impl ReportBuilder {
    pub fn new(command: &str) -> Self {
        ReportBuilder {
            report: Report {
                command: command.to_string(),
                parameters: Vec::new(),
                checks: Vec::new(),
                depths_used: Vec::new(),
                wall_time: 0.0,
            },
            started: Instant::now(),
        }
    }

    pub fn parameter(mut self, key: &str, value: impl ToString) -> Self {
        self.report.parameters.push((key.to_string(), value.to_string()));
        self
    }

    pub fn push(&mut self, check: Check) {
        self.report.checks.push(check);
    }

    pub fn push_depth(&mut self, depth: u64) {
        self.report.depths_used.push(depth);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>, depths: impl IntoIterator<Item = u64>) {
        self.report.checks.extend(checks);
        self.report.depths_used.extend(depths);
    }

    /// Finalise: checks sorted by name (grid ordering is parallel-dependent),
    /// depths deduplicated, wall time recorded.
    pub fn finish(mut self) -> Report {
        self.report.checks.sort_by(|a, b| a.name.cmp(&b.name));
        self.report.depths_used.sort_unstable();
        self.report.depths_used.dedup();
        self.report.wall_time = self.started.elapsed().as_secs_f64();
        self.report
    }
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// Process exit code: 0 all-pass, 1 any failure.
    pub fn exit_code(&self) -> i32 {
        if self.all_pass() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    /// Aligned text rendering: one line per check plus a summary.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        for (k, v) in &self.parameters {
            out.push_str(&format!("  {k} = {v}\n"));
        }
        let name_w = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(4).min(48);
        for c in &self.checks {
            let mode = match c.mode {
                Comparison::Exact => "exact".to_string(),
                Comparison::Digits(d) => format!("digits:{d}"),
                Comparison::UpToSign => "upToSign".to_string(),
            };
            let status = if c.pass { "pass" } else { "FAIL" };
            out.push_str(&format!("{status}  {:<name_w$}  [{mode}]", c.name));
            if !c.pass {
                out.push_str(&format!("  expected {} got {}\n", c.expected, c.actual));
            } else if c.expected.is_empty() {
                // informational check: the value is the payload
                out.push_str(&format!("  = {}\n", c.actual));
            } else {
                out.push('\n');
            }
        }
        if !self.depths_used.is_empty() {
            out.push_str(&format!("depths used: {:?}\n", self.depths_used));
        }
        let (pass, total) = (self.checks.iter().filter(|c| c.pass).count(), self.checks.len());
        out.push_str(&format!(
            "{}: {pass}/{total} checks passed in {:.2}s\n",
            if pass == total { "OK" } else { "FAILED" },
            self.wall_time
        ));
        out
    }
}

/// Convenience constructors for the common check shapes.
pub fn check_exact<T: PartialEq + ToString>(name: String, expected: T, actual: T) -> Check {
    let pass = expected == actual;
    Check {
        name,
        expected: expected.to_string(),
        actual: actual.to_string(),
        digits: None,
        mode: Comparison::Exact,
        pass,
    }
}

pub fn check_digits(name: String, expected: String, actual: String, digits: u32, pass: bool) -> Check {
    Check { name, expected, actual, digits: Some(digits), mode: Comparison::Digits(digits), pass }
}

pub fn check_up_to_sign(name: String, expected: String, actual: String, pass: bool) -> Check {
    Check { name, expected, actual, digits: None, mode: Comparison::UpToSign, pass }
}
