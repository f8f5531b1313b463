//! Verification reports.
//!
//! A report is a list of named checks with pass/fail counts, the node numbers
//! excluded as base cases, a census of type classes, and warnings for known
//! misprints in the published statements. Warnings never count as failures.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use serde::Serialize;
use serde_json::json;

/// At most this many violations are listed per check; counts stay exact.
pub const MAX_LISTED_VIOLATIONS: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub node: u64,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    /// Smallest and largest subject (node number, integer, level) examined.
    pub range: Option<(u64, u64)>,
    pub passed: u64,
    pub failed: u64,
    pub violations: Vec<Violation>,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            range: None,
            passed: 0,
            failed: 0,
            violations: Vec::new(),
        }
    }

    /// Records one examined subject. `detail` is only evaluated on failure.
    pub fn record(&mut self, subject: u64, ok: bool, detail: impl FnOnce() -> String) {
        self.range = Some(match self.range {
            None => (subject, subject),
            Some((lo, hi)) => (lo.min(subject), hi.max(subject)),
        });
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.violations.len() < MAX_LISTED_VIOLATIONS {
                self.violations.push(Violation {
                    node: subject,
                    detail: detail(),
                });
            }
        }
    }

    pub fn is_clean(&self) -> bool {
        self.failed == 0
    }
}

/// Known misprints in the published statements, each confirmed by computation
/// whenever it is reported.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Discrepancy {
    /// The rightmost node of white level `k` is `f_{2k+2} - 1`, not `f_{2k} - 1`.
    WhiteRightmostIndex,
    /// Strip leading tiles are `f_{2n+2} - 1`, not `f_{2n+1} - 1`.
    LeadingTileIndex,
    /// Type `b01` is populated; the empty ending among black nodes is `10`.
    EmptyTypeClass,
    /// Golden weights `1, 2, 5, ...` do not satisfy the black-tree successor
    /// rules; `1, 3, 8, ...` do.
    BlackGoldenInitialWeights,
}

impl Discrepancy {
    pub fn key(self) -> &'static str {
        match self {
            Discrepancy::WhiteRightmostIndex => "white_rightmost_index",
            Discrepancy::LeadingTileIndex => "leading_tile_index",
            Discrepancy::EmptyTypeClass => "empty_type_class",
            Discrepancy::BlackGoldenInitialWeights => "black_golden_initial_weights",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Warning {
    pub discrepancy: Discrepancy,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
    pub base_cases: Vec<u64>,
    pub census: BTreeMap<String, u64>,
    pub warnings: Vec<Warning>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Self {
            title: title.into(),
            ..Self::default()
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn warn(&mut self, discrepancy: Discrepancy, detail: impl Into<String>) {
        self.warnings.push(Warning {
            discrepancy,
            detail: detail.into(),
        });
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> u64 {
        self.checks.iter().map(|c| c.failed).sum()
    }

    pub fn passes(&self) -> u64 {
        self.checks.iter().map(|c| c.passed).sum()
    }

    pub fn is_clean(&self) -> bool {
        self.failures() == 0
    }

    pub fn has_warning(&self, discrepancy: Discrepancy) -> bool {
        self.warnings.iter().any(|w| w.discrepancy == discrepancy)
    }

    /// Line-delimited JSON: one record per check, base case, census class and
    /// warning, then a closing summary record.
    pub fn to_records(&self) -> String {
        let mut out = String::new();
        let mut line = |v: serde_json::Value| {
            out.push_str(&v.to_string());
            out.push('\n');
        };
        for c in &self.checks {
            line(json!({
                "record": "check",
                "report": self.title,
                "name": c.name,
                "range": c.range.map(|(lo, hi)| [lo, hi]),
                "passed": c.passed,
                "failed": c.failed,
                "violations": c.violations,
            }));
        }
        for &node in &self.base_cases {
            line(json!({ "record": "base_case", "report": self.title, "node": node }));
        }
        for (class, count) in &self.census {
            line(json!({
                "record": "census",
                "report": self.title,
                "class": class,
                "count": count,
            }));
        }
        for w in &self.warnings {
            line(json!({
                "record": "warning",
                "report": self.title,
                "discrepancy": w.discrepancy.key(),
                "detail": w.detail,
            }));
        }
        line(json!({
            "record": "summary",
            "report": self.title,
            "passed": self.passes(),
            "failed": self.failures(),
            "warnings": self.warnings.len(),
        }));
        out
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "== {}", self.title)?;
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let range = match c.range {
                Some((lo, hi)) => format!("{lo}..={hi}"),
                None => "-".to_string(),
            };
            writeln!(
                f,
                "  {:<width$}  {:>4}  passed {:>9}  failed {:>6}  range {}",
                c.name,
                if c.is_clean() { "ok" } else { "FAIL" },
                c.passed,
                c.failed,
                range,
            )?;
            for v in &c.violations {
                writeln!(f, "      node {}: {}", v.node, v.detail)?;
            }
        }
        if !self.base_cases.is_empty() {
            let list = self
                .base_cases
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(", ");
            writeln!(f, "  base cases: {list}")?;
        }
        if !self.census.is_empty() {
            let mut s = String::new();
            for (class, count) in &self.census {
                let _ = write!(s, " {class}={count}");
            }
            writeln!(f, "  census:{s}")?;
        }
        for w in &self.warnings {
            writeln!(f, "  warning [{}]: {}", w.discrepancy.key(), w.detail)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_counts_and_caps_violations() {
        let mut c = Check::new("demo");
        for n in 1..=100 {
            c.record(n, n % 2 == 0, || format!("{n} is odd"));
        }
        assert_eq!(c.passed, 50);
        assert_eq!(c.failed, 50);
        assert_eq!(c.violations.len(), MAX_LISTED_VIOLATIONS);
        assert_eq!(c.range, Some((1, 100)));
        assert_eq!(c.violations[0].detail, "1 is odd");
    }

    #[test]
    fn records_are_one_json_object_per_line() {
        let mut r = Report::new("t");
        let mut c = Check::new("a");
        c.record(3, true, String::new);
        r.push(c);
        r.base_cases = vec![1, 2];
        r.census.insert("b00".into(), 4);
        r.warn(Discrepancy::EmptyTypeClass, "b01 has 4 nodes");
        let text = r.to_records();
        let lines: Vec<serde_json::Value> = text
            .lines()
            .map(|l| serde_json::from_str(l).unwrap())
            .collect();
        assert_eq!(lines.len(), 6);
        assert_eq!(lines[0]["record"], "check");
        assert_eq!(lines[0]["range"], json!([3, 3]));
        assert_eq!(lines[4]["discrepancy"], "empty_type_class");
        assert_eq!(lines[5]["failed"], 0);
    }
}
