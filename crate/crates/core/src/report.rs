//! Machine-readable outcome of one verification: pass/fail status, an
//! optional residual witness, and timing.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
    #[serde(rename = "elapsedMillis")]
    pub elapsed_millis: u64,
}

impl Report {
    /// Runs `body` under timing; a returned error string becomes the
    /// failure witness.
    pub fn run<F>(check: &str, params: &[(&str, String)], body: F) -> Report
    where
        F: FnOnce() -> Result<(), String>,
    {
        let start = Instant::now();
        let outcome = body();
        let elapsed_millis = start.elapsed().as_millis() as u64;
        let (status, witness) = match outcome {
            Ok(()) => (Status::Pass, None),
            Err(w) => (Status::Fail, Some(w)),
        };
        Report {
            check: check.to_string(),
            params: params
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
            status,
            witness,
            elapsed_millis,
        }
    }

    pub fn skipped(check: &str, params: &[(&str, String)], reason: &str) -> Report {
        let mut params: BTreeMap<String, String> = params
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect();
        params.insert("reason".into(), reason.into());
        Report {
            check: check.to_string(),
            params,
            status: Status::Skipped,
            witness: None,
            elapsed_millis: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_and_fail_shapes() {
        let ok = Report::run("x", &[("n", "2".into())], || Ok(()));
        assert_eq!(ok.status, Status::Pass);
        assert!(ok.witness.is_none());
        let bad = Report::run("x", &[], || Err("entry (1,1)".into()));
        assert_eq!(bad.status, Status::Fail);
        assert_eq!(bad.witness.as_deref(), Some("entry (1,1)"));
        assert!(!bad.passed());
    }

    #[test]
    fn json_round_trip() {
        let r = Report::run("trace-identities", &[("family", "dj".into())], || Ok(()));
        let line = serde_json::to_string(&r).unwrap();
        let back: Report = serde_json::from_str(&line).unwrap();
        assert_eq!(r, back);
        assert!(line.contains("elapsedMillis"));
    }
}
