//! Pass/fail reports for the executable checks.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one named check, with the first counterexample on failure.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub check: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<serde_json::Value>,
}

impl Report {
    pub fn pass(check: &str, n: Option<u32>) -> Report {
        Report {
            check: check.to_string(),
            n,
            status: Status::Pass,
            counterexample: None,
        }
    }

    pub fn fail(check: &str, n: Option<u32>, counterexample: serde_json::Value) -> Report {
        Report {
            check: check.to_string(),
            n,
            status: Status::Fail,
            counterexample: Some(counterexample),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}
