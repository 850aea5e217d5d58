//! Machine-readable command reports: schema-versioned JSON with a command
//! echo, the quiver hash, structured results and verification outcomes.
//! Everything except the timing field is deterministic for a given input.

use serde::Serialize;

pub const SCHEMA_VERSION: &str = "clustercat-report/1";

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub quiver_hash: String,
    pub results: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<Verification>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

#[derive(Debug, Serialize)]
pub struct Verification {
    pub passed: bool,
    pub suites: Vec<SuiteOutcome>,
}

#[derive(Debug, Serialize)]
pub struct SuiteOutcome {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl Report {
    pub fn new(command: impl Into<String>, quiver_hash: impl Into<String>) -> Self {
        Report {
            schema: SCHEMA_VERSION,
            command: command.into(),
            quiver_hash: quiver_hash.into(),
            results: serde_json::Value::Null,
            verification: None,
            timing_ms: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }
}
