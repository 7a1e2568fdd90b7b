//! Named pass/fail checks with exact witness values.

use crate::exactnum::{format_decimal, BigRational, FieldElem};

/// Exact value attached to a check, for display and serialization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub label: String,
    pub value: FieldElem,
}

impl Witness {
    pub fn new(label: impl Into<String>, value: FieldElem) -> Witness {
        Witness {
            label: label.into(),
            value,
        }
    }

    /// Decimal rendering from a certified enclosure of width `1e-12`.
    pub fn approx(&self) -> String {
        approx_decimal(&self.value)
    }
}

/// Midpoint of a `1e-12` enclosure, printed to ten places.
pub fn approx_decimal(x: &FieldElem) -> String {
    let eps = BigRational::new(1.into(), 1_000_000_000_000i64.into());
    match x.to_interval(&eps) {
        Ok(iv) => format_decimal(&iv.midpoint(), 10),
        Err(_) => "nan".into(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub witnesses: Vec<Witness>,
    pub note: Option<String>,
}

impl CheckResult {
    pub fn new(name: impl Into<String>, passed: bool) -> CheckResult {
        CheckResult {
            name: name.into(),
            passed,
            witnesses: Vec::new(),
            note: None,
        }
    }

    pub fn witness(mut self, label: impl Into<String>, value: FieldElem) -> CheckResult {
        self.witnesses.push(Witness::new(label, value));
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> CheckResult {
        self.note = Some(note.into());
        self
    }
}

/// Ordered list of checks; the verdict is their conjunction.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn new(checks: Vec<CheckResult>) -> VerificationReport {
        VerificationReport { checks }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failed(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// Plain-text rendering, one line per check plus indented witnesses.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{tag}  {}\n", c.name));
            for w in &c.witnesses {
                out.push_str(&format!("      {} = {}  (~ {})\n", w.label, w.value, w.approx()));
            }
            if let Some(n) = &c.note {
                out.push_str(&format!("      note: {n}\n"));
            }
        }
        let verdict = if self.passed() { "VERIFIED" } else { "FAILED" };
        out.push_str(&format!("verdict: {verdict}\n"));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_is_conjunction() {
        let mut r = VerificationReport::new(vec![CheckResult::new("a", true), CheckResult::new("b", true)]);
        assert!(r.passed());
        r.checks.push(CheckResult::new("c", false));
        assert!(!r.passed());
        assert_eq!(r.failed().count(), 1);
        assert!(VerificationReport::default().passed());
    }

    #[test]
    fn approx_rendering() {
        let s3 = FieldElem::from_int(3).sqrt_adjoin().unwrap();
        assert_eq!(approx_decimal(&s3), "1.7320508076");
        assert_eq!(approx_decimal(&FieldElem::ratio(-1, 4)), "-0.2500000000");
    }
}
