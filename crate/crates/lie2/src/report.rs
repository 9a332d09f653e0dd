//! Structured pass/fail reports for verification checks.
//!
//! Every checker in the crate returns a [`Report`]: a list of named
//! conditions, each either passing or carrying the exact basis tuples where
//! it failed together with the (exact, stringified) residual vectors.

use serde::Serialize;

use crate::matrix::v_is_zero;
use crate::scalar::Scalar;

/// A single failing instance of a condition: the basis arguments at which it
/// failed and the exact residual there.
#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    /// Human-readable description of the basis arguments, e.g. `(e1, e3; f2)`.
    pub arguments: String,
    /// Residual vector coordinates, exact, as strings.
    pub residual: Vec<String>,
}

/// One named condition with its outcome.
#[derive(Clone, Debug, Serialize)]
pub struct ConditionReport {
    /// Stable, human-readable condition name.
    pub name: String,
    /// Whether the condition holds everywhere it was checked.
    pub passed: bool,
    /// Number of instances (basis tuples) checked.
    pub checked: usize,
    /// All failing instances (empty when `passed`).
    pub violations: Vec<Violation>,
}

impl ConditionReport {
    /// Builds a condition report from residual instances: every pair is
    /// `(argument description, residual vector)`; nonzero residuals become
    /// violations.
    pub fn from_residuals<S: Scalar>(
        name: impl Into<String>,
        instances: impl IntoIterator<Item = (String, Vec<S>)>,
    ) -> Self {
        let mut checked = 0;
        let mut violations = Vec::new();
        for (arguments, residual) in instances {
            checked += 1;
            if !v_is_zero(&residual) {
                violations.push(Violation {
                    arguments,
                    residual: residual.iter().map(|x| x.to_string()).collect(),
                });
            }
        }
        ConditionReport {
            name: name.into(),
            passed: violations.is_empty(),
            checked,
            violations,
        }
    }

    /// A condition with a single boolean outcome and no per-tuple data.
    pub fn from_flag(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        ConditionReport {
            name: name.into(),
            passed,
            checked: 1,
            violations: if passed {
                Vec::new()
            } else {
                vec![Violation {
                    arguments: detail.into(),
                    residual: Vec::new(),
                }]
            },
        }
    }
}

/// The outcome of a full check: a subject and its conditions.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    /// What was checked, e.g. `"Lie 2-algebra axioms"`.
    pub subject: String,
    /// Whether every condition passed.
    pub passed: bool,
    /// The individual conditions.
    pub conditions: Vec<ConditionReport>,
}

impl Report {
    /// Assembles a report, deriving the overall verdict.
    pub fn new(subject: impl Into<String>, conditions: Vec<ConditionReport>) -> Self {
        let passed = conditions.iter().all(|c| c.passed);
        Report {
            subject: subject.into(),
            passed,
            conditions,
        }
    }

    /// The first failing condition and violation, if any.
    pub fn first_failure(&self) -> Option<(&ConditionReport, Option<&Violation>)> {
        self.conditions
            .iter()
            .find(|c| !c.passed)
            .map(|c| (c, c.violations.first()))
    }

    /// Looks up a condition by name.
    pub fn condition(&self, name: &str) -> Option<&ConditionReport> {
        self.conditions.iter().find(|c| c.name == name)
    }

    /// Merges another report's conditions into this one, prefixing their
    /// names, and recomputes the verdict.
    pub fn absorb(mut self, prefix: &str, other: Report) -> Self {
        for mut c in other.conditions {
            c.name = format!("{prefix}{}", c.name);
            self.conditions.push(c);
        }
        self.passed = self.conditions.iter().all(|c| c.passed);
        self
    }

    /// One-line human summary.
    pub fn summary_line(&self) -> String {
        if self.passed {
            format!("{}: PASS ({} conditions)", self.subject, self.conditions.len())
        } else {
            let failing: Vec<&str> = self
                .conditions
                .iter()
                .filter(|c| !c.passed)
                .map(|c| c.name.as_str())
                .collect();
            format!(
                "{}: FAIL ({}/{} conditions failed: {})",
                self.subject,
                failing.len(),
                self.conditions.len(),
                failing.join(", ")
            )
        }
    }
}

/// Formats a basis tuple like `(e1, e3; f2)` from 0-based wedge indices and
/// 0-based symmetric indices (printed 1-based, matching file formats).
pub fn format_arguments(wedge: &[usize], sym: &[usize]) -> String {
    let xs: Vec<String> = wedge.iter().map(|i| format!("e{}", i + 1)).collect();
    let sym_names: Vec<String> = sym.iter().map(|j| format!("f{}", j + 1)).collect();
    match (xs.is_empty(), sym_names.is_empty()) {
        (false, false) => format!("({}; {})", xs.join(", "), sym_names.join(", ")),
        (false, true) => format!("({})", xs.join(", ")),
        (true, false) => format!("({})", sym_names.join(", ")),
        (true, true) => "()".to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rat;

    #[test]
    fn report_assembles_verdicts() {
        let ok = ConditionReport::from_residuals::<Rat>(
            "always-zero",
            vec![("(e1)".to_string(), vec![Rat::int(0)])],
        );
        let bad = ConditionReport::from_residuals::<Rat>(
            "never-zero",
            vec![
                ("(e1)".to_string(), vec![Rat::int(0)]),
                ("(e2)".to_string(), vec![Rat::int(5)]),
            ],
        );
        assert!(ok.passed);
        assert!(!bad.passed);
        assert_eq!(bad.checked, 2);
        assert_eq!(bad.violations.len(), 1);
        assert_eq!(bad.violations[0].residual, vec!["5"]);

        let rep = Report::new("demo", vec![ok, bad]);
        assert!(!rep.passed);
        let (cond, viol) = rep.first_failure().unwrap();
        assert_eq!(cond.name, "never-zero");
        assert_eq!(viol.unwrap().arguments, "(e2)");
        assert!(rep.summary_line().contains("FAIL"));
        assert!(rep.condition("always-zero").unwrap().passed);
    }

    #[test]
    fn argument_formatting() {
        assert_eq!(format_arguments(&[0, 2], &[]), "(e1, e3)");
        assert_eq!(format_arguments(&[], &[1]), "(f2)");
        assert_eq!(format_arguments(&[0], &[0, 1]), "(e1; f1, f2)");
        assert_eq!(format_arguments(&[], &[]), "()");
    }

    #[test]
    fn merged_reports_prefix_names() {
        let a = Report::new(
            "outer",
            vec![ConditionReport::from_flag("x", true, "")],
        );
        let b = Report::new(
            "inner",
            vec![ConditionReport::from_flag("y", false, "broken")],
        );
        let merged = a.absorb("inner: ", b);
        assert!(!merged.passed);
        assert!(merged.condition("inner: y").is_some());
    }

    #[test]
    fn serializes_to_json() {
        let rep = Report::new(
            "demo",
            vec![ConditionReport::from_flag("x", true, "")],
        );
        let json = serde_json::to_value(&rep).unwrap();
        assert_eq!(json["passed"], serde_json::json!(true));
        assert_eq!(json["conditions"][0]["name"], serde_json::json!("x"));
    }
}
