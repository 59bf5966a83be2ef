//! Verified-inequality reports and suite aggregation.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Default relative tolerance for pass/fail comparisons; double-precision
/// sums over at most 2^24 terms stay well inside it.
pub const DEFAULT_TOL: f64 = 1e-9;

/// One verified inequality instance.
///
/// `pass` is `Some(lhs <= rhs * (1 + tol))` for asserted checks and `None`
/// for observational reports (empirical ratios, out-of-hypothesis noise
/// parameters) where no claim is being made.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InequalityReport {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub ratio: f64,
    pub pass: Option<bool>,
    pub tol: f64,
    pub witness: Option<String>,
    pub params: BTreeMap<String, f64>,
}

impl InequalityReport {
    /// Asserted comparison lhs ≤ rhs·(1+tol).
    pub fn asserted(name: impl Into<String>, lhs: f64, rhs: f64, tol: f64) -> Self {
        InequalityReport {
            name: name.into(),
            lhs,
            rhs,
            ratio: ratio_of(lhs, rhs),
            pass: Some(lhs <= rhs * (1.0 + tol)),
            tol,
            witness: None,
            params: BTreeMap::new(),
        }
    }

    /// Observational report: carries lhs/rhs/ratio without asserting a bound.
    pub fn observed(name: impl Into<String>, lhs: f64, rhs: f64, tol: f64) -> Self {
        InequalityReport {
            name: name.into(),
            lhs,
            rhs,
            ratio: ratio_of(lhs, rhs),
            pass: None,
            tol,
            witness: None,
            params: BTreeMap::new(),
        }
    }

    pub fn with_witness(mut self, witness: impl Into<String>) -> Self {
        self.witness = Some(witness.into());
        self
    }

    pub fn with_param(mut self, key: impl Into<String>, value: f64) -> Self {
        self.params.insert(key.into(), value);
        self
    }

    pub fn failed(&self) -> bool {
        self.pass == Some(false)
    }

    /// Header for the CSV flattening; `param_keys` become trailing columns.
    pub fn csv_header(param_keys: &[&str]) -> String {
        let mut cols = vec![
            "name".to_string(),
            "lhs".to_string(),
            "rhs".to_string(),
            "ratio".to_string(),
            "pass".to_string(),
            "tol".to_string(),
            "witness".to_string(),
        ];
        cols.extend(param_keys.iter().map(|k| k.to_string()));
        cols.join(",")
    }

    /// One CSV row with params inlined as columns (blank when absent).
    pub fn csv_row(&self, param_keys: &[&str]) -> String {
        let mut cols = vec![
            self.name.clone(),
            fmt_float(self.lhs),
            fmt_float(self.rhs),
            fmt_float(self.ratio),
            match self.pass {
                Some(true) => "true".to_string(),
                Some(false) => "false".to_string(),
                None => String::new(),
            },
            fmt_float(self.tol),
            self.witness.clone().unwrap_or_default(),
        ];
        for key in param_keys {
            cols.push(
                self.params
                    .get(*key)
                    .map(|v| fmt_float(*v))
                    .unwrap_or_default(),
            );
        }
        cols.join(",")
    }
}

fn ratio_of(lhs: f64, rhs: f64) -> f64 {
    if rhs == 0.0 {
        if lhs == 0.0 {
            0.0
        } else {
            f64::INFINITY
        }
    } else {
        lhs / rhs
    }
}

/// Floats formatted with 17 significant digits so text round-trips are
/// lossless.
pub fn fmt_float(v: f64) -> String {
    format!("{v:.16e}")
}

/// Aggregated result of one named verification suite.
///
/// Wall time is intentionally not part of the serialized result: suite JSON
/// must be byte-identical across runs with the same seed. Callers print
/// timing separately.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteResult {
    pub suite: String,
    pub seed: u64,
    pub params: BTreeMap<String, f64>,
    pub passed: usize,
    pub failed: usize,
    pub reports: Vec<InequalityReport>,
}

impl SuiteResult {
    pub fn new(suite: impl Into<String>, seed: u64, params: BTreeMap<String, f64>) -> Self {
        SuiteResult {
            suite: suite.into(),
            seed,
            params,
            passed: 0,
            failed: 0,
            reports: Vec::new(),
        }
    }

    pub fn push(&mut self, report: InequalityReport) {
        if report.failed() {
            self.failed += 1;
        } else {
            self.passed += 1;
        }
        self.reports.push(report);
    }

    pub fn extend(&mut self, reports: impl IntoIterator<Item = InequalityReport>) {
        for r in reports {
            self.push(r);
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_flag_tracks_tolerance() {
        let r = InequalityReport::asserted("t", 1.0, 1.0, 1e-9);
        assert_eq!(r.pass, Some(true));
        assert_eq!(r.ratio, 1.0);
        let r = InequalityReport::asserted("t", 1.0 + 1e-6, 1.0, 1e-9);
        assert_eq!(r.pass, Some(false));
    }

    #[test]
    fn zero_over_zero_ratio_is_zero() {
        let r = InequalityReport::asserted("t", 0.0, 0.0, 1e-9);
        assert_eq!(r.ratio, 0.0);
        assert_eq!(r.pass, Some(true));
    }

    #[test]
    fn csv_round_trip_formatting() {
        let r = InequalityReport::asserted("markov", 3.0, 3.0, 1e-6)
            .with_param("d", 3.0)
            .with_param("m", 1.0);
        let row = r.csv_row(&["d", "m"]);
        assert!(row.starts_with("markov,"));
        assert!(row.ends_with(",3.0000000000000000e0,1.0000000000000000e0"));
        let header = InequalityReport::csv_header(&["d", "m"]);
        assert_eq!(header.matches(',').count(), row.matches(',').count());
    }

    #[test]
    fn suite_counts_are_consistent() {
        let mut s = SuiteResult::new("demo", 7, BTreeMap::new());
        s.push(InequalityReport::asserted("a", 0.0, 1.0, 1e-9));
        s.push(InequalityReport::asserted("b", 2.0, 1.0, 1e-9));
        s.push(InequalityReport::observed("c", 2.0, 1.0, 1e-9));
        assert_eq!((s.passed, s.failed), (2, 1));
        assert!(!s.all_passed());
    }
}
