//! Check results and report rendering.
//!
//! The JSON document is the single source of truth; the Markdown table is
//! derived from it. Checks are sorted by name and no timestamps are
//! recorded, so identical configurations produce byte-identical reports.

use serde::{Deserialize, Serialize};

/// Outcome of one verification check.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Check {
    /// Stable check identifier, e.g. `ga/oracle-equivalence`.
    pub name: String,
    /// The algebraic law the check exercises, in words.
    pub law: String,
    /// `exact` or `float`.
    pub mode: String,
    /// Number of instances exercised.
    pub cases: usize,
    /// Largest residual observed (0 for exact checks that pass).
    pub max_residual: f64,
    /// Tolerance the residual was held against (0 for exact checks).
    pub tolerance: f64,
    pub passed: bool,
    /// Optional free-form data, e.g. the deviation table of the flat limit.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

impl Check {
    pub fn exact(name: &str, law: &str, cases: usize, failures: usize) -> Self {
        Check {
            name: name.to_string(),
            law: law.to_string(),
            mode: "exact".to_string(),
            cases,
            max_residual: if failures == 0 { 0.0 } else { failures as f64 },
            tolerance: 0.0,
            passed: failures == 0,
            detail: None,
        }
    }

    pub fn float(name: &str, law: &str, cases: usize, max_residual: f64, tol: f64) -> Self {
        Check {
            name: name.to_string(),
            law: law.to_string(),
            mode: "float".to_string(),
            cases,
            max_residual,
            tolerance: tol,
            passed: max_residual <= tol,
            detail: None,
        }
    }

    pub fn with_detail(mut self, detail: String) -> Self {
        self.detail = Some(detail);
        self
    }
}

/// Full report of a verification run.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub suite: String,
    pub seed: u64,
    pub mode: String,
    pub ell: f64,
    pub m: f64,
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl Report {
    pub fn new(
        suite: &str,
        seed: u64,
        mode: &str,
        ell: f64,
        m: f64,
        mut checks: Vec<Check>,
    ) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        let passed = checks.iter().all(|c| c.passed);
        Report {
            schema: 1,
            suite: suite.to_string(),
            seed,
            mode: mode.to_string(),
            ell,
            m,
            checks,
            passed,
        }
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }

    /// Markdown rendering, derived from the same data as the JSON.
    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "# Verification report: {} (seed {}, mode {})\n\n",
            self.suite, self.seed, self.mode
        ));
        out.push_str(&format!("Radius l = {}, mass m = {}\n\n", self.ell, self.m));
        out.push_str("| check | law | mode | cases | max residual | tolerance | status |\n");
        out.push_str("|---|---|---|---:|---:|---:|---|\n");
        for c in &self.checks {
            out.push_str(&format!(
                "| {} | {} | {} | {} | {:.3e} | {:.1e} | {} |\n",
                c.name,
                c.law,
                c.mode,
                c.cases,
                c.max_residual,
                c.tolerance,
                if c.passed { "pass" } else { "FAIL" }
            ));
        }
        for c in &self.checks {
            if let Some(detail) = &c.detail {
                out.push_str(&format!("\n## {}\n\n{}\n", c.name, detail));
            }
        }
        out.push_str(&format!(
            "\n{} of {} checks passed.\n",
            self.checks.iter().filter(|c| c.passed).count(),
            self.checks.len()
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reports_sort_checks_and_are_deterministic() {
        let checks = vec![
            Check::float("z/last", "law", 3, 1e-12, 1e-10),
            Check::exact("a/first", "law", 5, 0),
        ];
        let r1 = Report::new("all", 7, "exact", 1.0, 1.0, checks.clone());
        let r2 = Report::new("all", 7, "exact", 1.0, 1.0, checks);
        assert_eq!(r1.checks[0].name, "a/first");
        assert!(r1.passed);
        assert_eq!(r1.to_json().unwrap(), r2.to_json().unwrap());
        assert!(r1.to_markdown().contains("| a/first |"));
    }

    #[test]
    fn failures_propagate() {
        let r = Report::new(
            "ga",
            0,
            "exact",
            1.0,
            0.0,
            vec![Check::exact("x", "law", 1, 2)],
        );
        assert!(!r.passed);
    }
}
