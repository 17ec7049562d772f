use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use crate::error::Error;
use crate::frames::SpectralBounds;

/// Process exit status: 0 success, 1 input error, 2 certification failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Success = 0,
    InputError = 1,
    CertificationFailure = 2,
}

impl Status {
    pub fn code(self) -> i32 {
        self as i32
    }

    pub fn of_error(e: &Error) -> Self {
        if e.is_certification_failure() {
            Status::CertificationFailure
        } else {
            Status::InputError
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub analysis: String,
    pub kind: String,
    #[serde(rename = "A", skip_serializing_if = "Option::is_none")]
    pub lower: Option<f64>,
    #[serde(rename = "B", skip_serializing_if = "Option::is_none")]
    pub upper: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub support_rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tight: Option<bool>,
    pub defects: BTreeMap<String, f64>,
    /// `None` when no oracle applies.
    pub oracle_agreement: Option<bool>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub details: Value,
    #[serde(skip)]
    pub status: Status,
}

impl Report {
    pub fn new(analysis: &str, kind: &str) -> Self {
        Self {
            analysis: analysis.to_string(),
            kind: kind.to_string(),
            lower: None,
            upper: None,
            support_rank: None,
            tight: None,
            defects: BTreeMap::new(),
            oracle_agreement: None,
            passed: true,
            error: None,
            details: Value::Null,
            status: Status::Success,
        }
    }

    pub fn failed(analysis: &str, e: &Error) -> Self {
        let mut r = Self::new(analysis, "error");
        r.passed = false;
        r.error = Some(e.to_string());
        r.status = Status::of_error(e);
        r
    }

    pub fn with_bounds(mut self, b: &SpectralBounds) -> Self {
        self.kind = serde_json::to_value(b.kind)
            .ok()
            .and_then(|v| v.as_str().map(str::to_string))
            .unwrap_or_default();
        self.lower = Some(b.lower);
        self.upper = Some(b.upper);
        self.support_rank = Some(b.support_rank);
        self.tight = Some(b.tight);
        self
    }

    pub fn defect(&mut self, name: &str, value: f64) {
        self.defects.insert(name.to_string(), value);
    }

    /// Records a defect and fails the report if it exceeds `tol`.
    pub fn check(&mut self, name: &str, value: f64, tol: f64) {
        self.defect(name, value);
        if value.is_nan() || value > tol {
            self.fail();
        }
    }

    pub fn oracle(&mut self, agrees: bool) {
        self.oracle_agreement = Some(self.oracle_agreement.unwrap_or(true) && agrees);
        if !agrees {
            self.fail();
        }
    }

    pub fn fail(&mut self) {
        self.passed = false;
        self.status = self.status.max(Status::CertificationFailure);
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Document {
    pub command: String,
    pub seed: u64,
    pub tol: f64,
    pub rank_cutoff: f64,
    pub passed: bool,
    pub reports: Vec<Report>,
}

impl Document {
    pub fn new(command: &str, seed: u64, tol: f64, rank_cutoff: f64, reports: Vec<Report>) -> Self {
        Self {
            command: command.to_string(),
            seed,
            tol,
            rank_cutoff,
            passed: reports.iter().all(|r| r.passed),
            reports,
        }
    }

    /// Input errors take precedence over certification failures.
    pub fn status(&self) -> Status {
        let statuses: Vec<Status> = self.reports.iter().map(|r| r.status).collect();
        if statuses.contains(&Status::InputError) {
            Status::InputError
        } else {
            statuses.into_iter().max().unwrap_or(Status::Success)
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    /// One line per report for `--verbose`.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            out.push_str(&format!("{:<22} {:<12}", r.analysis, r.kind));
            if let (Some(a), Some(b)) = (r.lower, r.upper) {
                out.push_str(&format!(" A={a:.6} B={b:.6}"));
            }
            if let Some(worst) = r.defects.values().copied().reduce(f64::max) {
                out.push_str(&format!(" max_defect={worst:.2e}"));
            }
            out.push_str(if r.passed { " ok" } else { " FAILED" });
            if let Some(e) = &r.error {
                out.push_str(&format!(" ({e})"));
            }
            out.push('\n');
        }
        out
    }
}
