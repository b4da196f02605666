//! Claim outcomes with machine-readable serialization: one JSON object per
//! claim, or a CSV summary row.

use serde_json::json;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skip",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of one executable claim on one graph. A failing result always
/// carries a concrete witness.
#[derive(Debug, Clone)]
pub struct VerificationResult {
    pub claim: String,
    pub spec: String,
    pub status: Status,
    pub witnesses: Vec<String>,
    pub notes: Vec<String>,
}

impl VerificationResult {
    pub fn pass(claim: &str, spec: &str) -> Self {
        VerificationResult {
            claim: claim.to_string(),
            spec: spec.to_string(),
            status: Status::Pass,
            witnesses: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn fail(claim: &str, spec: &str, witness: String) -> Self {
        VerificationResult {
            claim: claim.to_string(),
            spec: spec.to_string(),
            status: Status::Fail,
            witnesses: vec![witness],
            notes: Vec::new(),
        }
    }

    pub fn skipped(claim: &str, spec: &str, reason: String) -> Self {
        VerificationResult {
            claim: claim.to_string(),
            spec: spec.to_string(),
            status: Status::Skipped,
            witnesses: Vec::new(),
            notes: vec![reason],
        }
    }

    pub fn with_witness(mut self, w: String) -> Self {
        self.witnesses.push(w);
        self
    }

    pub fn with_note(mut self, n: String) -> Self {
        self.notes.push(n);
        self
    }

    /// Marks failure and records the witness; passes accumulate witnesses
    /// as informational output.
    pub fn check(&mut self, ok: bool, witness: String) {
        if !ok {
            self.status = Status::Fail;
            self.witnesses.push(witness);
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "claim": self.claim,
            "spec": self.spec,
            "status": self.status.as_str(),
            "witnesses": self.witnesses,
            "notes": self.notes,
        })
    }

    /// `claim,spec,status` summary row (fields quoted if needed).
    pub fn csv_row(&self) -> String {
        format!("{},{},{}", self.claim, self.spec, self.status)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_flips_status() {
        let mut r = VerificationResult::pass("c", "nsg:1;1");
        r.check(true, "fine".into());
        assert!(r.passed());
        r.check(false, "broken: lhs=1 rhs=2".into());
        assert_eq!(r.status, Status::Fail);
        assert!(r.witnesses.iter().any(|w| w.contains("broken")));
        assert_eq!(r.csv_row(), "c,nsg:1;1,fail");
        assert_eq!(r.to_json()["status"], "fail");
    }
}
