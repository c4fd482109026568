//! Machine-checkable verification reports.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::rootsys::RootSystem;
use crate::ENGINE_VERSION;

/// One failing instance of a check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    /// Reduced word of the element under test (or another subject label).
    pub element: String,
    /// Reduced word of its inverse, when the subject is a group element.
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub inverse: String,
    pub expected: String,
    pub actual: String,
}

/// Informational row; never affects `passed`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Finding {
    pub subject: String,
    pub detail: Value,
}

/// Simple-root labeling used by the report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Labeling {
    pub convention: String,
    /// Dynkin edges: `i-j` simple bond, `i=k=>j` multiple bond of
    /// multiplicity `k` pointing from long to short.
    pub diagram: Vec<String>,
    pub long: Vec<usize>,
    pub short: Vec<usize>,
}

impl Labeling {
    pub fn of(rs: &RootSystem) -> Self {
        let c = rs.cartan_matrix();
        let n = rs.rank();
        let mut diagram = Vec::new();
        for (i, row) in c.iter().enumerate() {
            for (j, &cij) in row.iter().enumerate().skip(i + 1) {
                if cij == 0 {
                    continue;
                }
                let k = cij * c[j][i];
                if k == 1 {
                    diagram.push(format!("{}-{}", i + 1, j + 1));
                } else if cij.abs() > c[j][i].abs() {
                    // |⟨α_j, α_i∨⟩| > 1 means α_i is the short end
                    diagram.push(format!("{}={}=>{}", j + 1, k, i + 1));
                } else {
                    diagram.push(format!("{}={}=>{}", i + 1, k, j + 1));
                }
            }
        }
        let (mut long, mut short) = (Vec::new(), Vec::new());
        for i in 1..=n {
            let r = rs.simple_root(i).expect("index in range");
            if r.long || rs.is_simply_laced() {
                long.push(i);
            } else {
                short.push(i);
            }
        }
        Labeling {
            convention: "Bourbaki".into(),
            diagram,
            long,
            short,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub universe: u64,
    pub passed: bool,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed_ms: u64,
    pub engine_version: String,
    pub labeling: Labeling,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub findings: Vec<Finding>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<Report>,
}

impl Report {
    pub fn new(check: &str, rs: &RootSystem) -> Self {
        Report {
            check: check.to_string(),
            cartan_type: rs.cartan_type().to_string(),
            universe: 0,
            passed: true,
            counterexamples: Vec::new(),
            elapsed_ms: 0,
            engine_version: ENGINE_VERSION.to_string(),
            labeling: Labeling::of(rs),
            findings: Vec::new(),
            children: Vec::new(),
        }
    }

    pub fn fail(&mut self, cx: Counterexample) {
        self.counterexamples.push(cx);
    }

    pub fn note(&mut self, subject: impl Into<String>, detail: Value) {
        self.findings.push(Finding {
            subject: subject.into(),
            detail,
        });
    }

    /// Adds a sub-report; a failing child contributes a counterexample.
    pub fn push_child(&mut self, child: Report) {
        if !child.passed {
            self.counterexamples.push(Counterexample {
                element: child.check.clone(),
                inverse: String::new(),
                expected: "passed".into(),
                actual: format!("{} counterexample(s)", child.counterexamples.len()),
            });
        }
        self.universe += child.universe;
        self.children.push(child);
    }

    /// Seals the report: sets `passed` and the elapsed time.
    pub fn finish(mut self, start: Instant) -> Self {
        self.passed = self.counterexamples.is_empty();
        self.elapsed_ms = start.elapsed().as_millis() as u64;
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Plain-text table.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out, 0);
        out
    }

    fn render_into(&self, out: &mut String, depth: usize) {
        let pad = "  ".repeat(depth);
        out.push_str(&format!(
            "{pad}{:<14} {:<4} universe={:<8} {} ({} ms)\n",
            self.check,
            self.cartan_type,
            self.universe,
            if self.passed { "PASS" } else { "FAIL" },
            self.elapsed_ms
        ));
        for cx in &self.counterexamples {
            out.push_str(&format!(
                "{pad}  counterexample {} (inverse {}): expected {}, got {}\n",
                cx.element,
                if cx.inverse.is_empty() {
                    "-"
                } else {
                    &cx.inverse
                },
                cx.expected,
                cx.actual
            ));
        }
        for f in &self.findings {
            out.push_str(&format!("{pad}  {}: {}\n", f.subject, f.detail));
        }
        for c in &self.children {
            c.render_into(out, depth + 1);
        }
    }
}
