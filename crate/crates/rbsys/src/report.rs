//! Structured check reports.
//!
//! Every verifier returns a [`Report`]: a verdict, an optional
//! counterexample citing basis indices (1-based, matching the `e_{ij}`
//! conventions of the input files), and nested sub-reports. Serialisation
//! is deterministic: field order is fixed and all collections are ordered.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    /// 1-based basis indices of the violating tuple.
    pub indices: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub residual: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub name: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub message: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "is_zero", default)]
    pub skipped: u64,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub sub_reports: Vec<Report>,
}

fn is_zero(n: &u64) -> bool {
    *n == 0
}

impl Report {
    pub fn pass(name: impl Into<String>) -> Report {
        Report {
            name: name.into(),
            verdict: Verdict::Pass,
            message: None,
            counterexample: None,
            skipped: 0,
            sub_reports: Vec::new(),
        }
    }

    pub fn fail(name: impl Into<String>, counterexample: Counterexample) -> Report {
        Report {
            counterexample: Some(counterexample),
            ..Report::fail_msg(name, "identity violated")
        }
    }

    pub fn fail_msg(name: impl Into<String>, msg: impl Into<String>) -> Report {
        Report {
            name: name.into(),
            verdict: Verdict::Fail,
            message: Some(msg.into()),
            counterexample: None,
            skipped: 0,
            sub_reports: Vec::new(),
        }
    }

    pub fn error(name: impl Into<String>, msg: impl Into<String>) -> Report {
        Report {
            name: name.into(),
            verdict: Verdict::Error,
            message: Some(msg.into()),
            counterexample: None,
            skipped: 0,
            sub_reports: Vec::new(),
        }
    }

    /// Bundles sub-reports; the verdict is the worst of the children
    /// (error > fail > pass).
    pub fn aggregate(name: impl Into<String>, subs: Vec<Report>) -> Report {
        let verdict = subs.iter().fold(Verdict::Pass, |acc, r| match (acc, r.verdict) {
            (Verdict::Error, _) | (_, Verdict::Error) => Verdict::Error,
            (Verdict::Fail, _) | (_, Verdict::Fail) => Verdict::Fail,
            _ => Verdict::Pass,
        });
        Report {
            name: name.into(),
            verdict,
            message: None,
            counterexample: None,
            skipped: 0,
            sub_reports: subs,
        }
    }

    pub fn with_message(mut self, msg: impl Into<String>) -> Report {
        self.message = Some(msg.into());
        self
    }

    pub fn with_skipped(mut self, skipped: u64) -> Report {
        self.skipped = skipped;
        self
    }

    pub fn ok(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn is_error(&self) -> bool {
        self.verdict == Verdict::Error
    }

    /// Renders `name: verdict` lines for the whole tree, two-space indented.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        self.summarize(0, &mut out);
        out
    }

    fn summarize(&self, depth: usize, out: &mut String) {
        out.push_str(&"  ".repeat(depth));
        out.push_str(&self.name);
        out.push_str(": ");
        out.push_str(match self.verdict {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::Error => "ERROR",
        });
        if self.skipped > 0 {
            out.push_str(&format!(" (skipped {})", self.skipped));
        }
        out.push('\n');
        for sub in &self.sub_reports {
            sub.summarize(depth + 1, out);
        }
    }
}

/// Counterexample builder used by the basis-tuple checkers.
pub fn counterexample(indices: &[usize], lhs: String, rhs: String) -> Counterexample {
    Counterexample {
        indices: indices.iter().map(|i| i + 1).collect(),
        lhs,
        rhs,
        residual: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aggregate_verdicts() {
        let r = Report::aggregate(
            "outer",
            vec![Report::pass("a"), Report::fail_msg("b", "nope")],
        );
        assert_eq!(r.verdict, Verdict::Fail);
        let r = Report::aggregate("outer", vec![Report::pass("a")]);
        assert!(r.ok());
        let r = Report::aggregate(
            "outer",
            vec![Report::fail_msg("b", "x"), Report::error("c", "y")],
        );
        assert_eq!(r.verdict, Verdict::Error);
    }

    #[test]
    fn serialization_shape() {
        let r = Report::pass("check");
        let js = serde_json::to_string(&r).unwrap();
        assert_eq!(js, r#"{"name":"check","verdict":"pass"}"#);
    }

    #[test]
    fn counterexample_indices_are_one_based() {
        let c = counterexample(&[0, 2], "x".into(), "y".into());
        assert_eq!(c.indices, vec![1, 3]);
    }
}
