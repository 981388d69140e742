use serde::Serialize;

use crate::bernstein::{CertSummary, PositivityCertificate};
use crate::rational::{serde_frac, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Verified,
    CertificationFailed,
    OracleViolation,
}

impl Status {
    /// Process exit code for this outcome.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Verified => 0,
            Status::CertificationFailed => 2,
            Status::OracleViolation => 3,
        }
    }
}

/// One named sub-check of a verification.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SubCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl SubCheck {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OracleStats {
    pub samples: usize,
    pub observed_max: f64,
    pub allowed_max: f64,
    /// `allowed_max - observed_max`; negative means a violation.
    pub gap: f64,
}

impl OracleStats {
    pub fn new(samples: usize, observed_max: f64, allowed_max: f64) -> Self {
        Self {
            samples,
            observed_max,
            allowed_max,
            gap: allowed_max - observed_max,
        }
    }

    pub fn ok(&self) -> bool {
        self.observed_max <= self.allowed_max
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    #[serde(with = "serde_frac::option")]
    pub bound: Option<Rational>,
    pub status: Status,
    pub artifacts: Vec<String>,
    pub checks: Vec<SubCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleStats>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate_summary: Option<CertSummary>,
    #[serde(skip)]
    pub certificate: Option<PositivityCertificate>,
}

impl VerificationReport {
    /// Status is `verified` only when every sub-check and the oracle pass;
    /// a failed exact check outranks an oracle violation.
    pub fn assemble(
        claim: impl Into<String>,
        bound: Option<Rational>,
        checks: Vec<SubCheck>,
        oracle: Option<OracleStats>,
    ) -> Self {
        let status = if checks.iter().any(|c| !c.passed) {
            Status::CertificationFailed
        } else if oracle.as_ref().is_some_and(|o| !o.ok()) {
            Status::OracleViolation
        } else {
            Status::Verified
        };
        Self {
            claim: claim.into(),
            bound,
            status,
            artifacts: vec![],
            checks,
            oracle,
            certificate_summary: None,
            certificate: None,
        }
    }

    pub fn verified(&self) -> bool {
        self.status == Status::Verified
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable multi-line rendering.
    pub fn render(&self) -> String {
        let mut s = format!("claim: {}\n", self.claim);
        if let Some(b) = &self.bound {
            s.push_str(&format!("bound: {b}\n"));
        }
        for c in &self.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            s.push_str(&format!("  [{mark}] {}: {}\n", c.name, c.detail));
        }
        if let Some(o) = &self.oracle {
            s.push_str(&format!(
                "oracle: {} samples, observed max {:.12e}, allowed {:.12e}, gap {:.12e}\n",
                o.samples, o.observed_max, o.allowed_max, o.gap
            ));
        }
        if let Some(c) = &self.certificate_summary {
            s.push_str(&format!(
                "certificate: {} nodes, {} leaves ({} positive, {} corner, {} failed), depth {}\n",
                c.nodes, c.leaves, c.coeff_positive, c.corner_certified, c.failed, c.depth
            ));
        }
        for a in &self.artifacts {
            s.push_str(&format!("artifact: {a}\n"));
        }
        s.push_str(&format!(
            "status: {}\n",
            serde_json::to_value(self.status).unwrap().as_str().unwrap()
        ));
        s
    }
}
