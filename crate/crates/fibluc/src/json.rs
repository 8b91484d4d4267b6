//! Structured report output.
//!
//! A report is a JSON array with one object per grid cell:
//! `{id, n, k, status, elapsed_ms, lhs?, rhs?, note?}`. `n` and `k` are
//! `null` where the identity does not use them; `lhs`/`rhs` appear only on
//! failures and `note` only on evaluation errors.

use fibluc_core::report::{CellRecord, CheckReport};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonRecord {
    pub id: String,
    pub n: Option<u32>,
    pub k: Option<u32>,
    pub status: String,
    pub elapsed_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

impl From<&CellRecord> for JsonRecord {
    fn from(r: &CellRecord) -> Self {
        JsonRecord {
            id: r.id.clone(),
            n: r.n,
            k: r.k,
            status: r.status.as_str().to_string(),
            elapsed_ms: r.elapsed_ms,
            lhs: r.lhs.clone(),
            rhs: r.rhs.clone(),
            note: r.note.clone(),
        }
    }
}

pub fn records(report: &CheckReport) -> Vec<JsonRecord> {
    report.records.iter().map(JsonRecord::from).collect()
}

pub fn to_json(report: &CheckReport) -> String {
    serde_json::to_string_pretty(&records(report)).expect("report serializes")
}
