//! Text and JSON renderings of check reports.

use hoflab_core::verify::CheckReport;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleRecord {
    pub index: u64,
    pub expected: String,
    pub actual: String,
    pub detail: String,
}

/// One JSON object per check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub name: String,
    pub lo: u64,
    pub hi: u64,
    pub passed: u64,
    pub failed: u64,
    pub counterexample: Option<CounterexampleRecord>,
    pub elapsed_ms: u64,
}

impl From<&CheckReport> for ReportRecord {
    fn from(r: &CheckReport) -> Self {
        ReportRecord {
            name: r.check_name.clone(),
            lo: r.lo,
            hi: r.hi,
            passed: r.passed,
            failed: r.failed,
            counterexample: r
                .first_counterexample
                .as_ref()
                .map(|c| CounterexampleRecord {
                    index: c.index,
                    expected: c.expected.clone(),
                    actual: c.actual.clone(),
                    detail: c.detail.clone(),
                }),
            elapsed_ms: r.elapsed.as_millis() as u64,
        }
    }
}

/// One line per report.
pub fn to_text(reports: &[CheckReport]) -> String {
    reports.iter().map(|r| format!("{r}\n")).collect()
}

/// A JSON array of [`ReportRecord`]s.
pub fn to_json(reports: &[CheckReport]) -> String {
    let records: Vec<ReportRecord> = reports.iter().map(ReportRecord::from).collect();
    serde_json::to_string_pretty(&records).expect("records serialize") + "\n"
}

#[cfg(test)]
mod tests {
    use super::*;
    use hoflab_core::verify::{check_avg_theorem, Counterexample};
    use std::time::Duration;

    #[test]
    fn json_roundtrip() {
        let mut r = check_avg_theorem(18);
        r.elapsed = Duration::from_millis(3);
        r.failed = 1;
        r.first_counterexample = Some(Counterexample {
            index: 4,
            expected: "3".into(),
            actual: "2".into(),
            detail: "x".into(),
        });
        let json = to_json(std::slice::from_ref(&r));
        let back: Vec<ReportRecord> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, [ReportRecord::from(&r)]);
        assert_eq!(back[0].elapsed_ms, 3);
    }

    #[test]
    fn text_lines() {
        let r = check_avg_theorem(18);
        let text = to_text(&[r]);
        assert!(text.starts_with("PASS avg_theorem lo=0 hi=18 passed=19 failed=0"));
        assert!(text.ends_with('\n'));
    }
}
