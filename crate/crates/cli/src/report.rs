//! The JSON object written to standard output for every run.
//!
//! ```text
//! {
//!   "tool": "kaplansky", "version": "...",
//!   "command": "probe --group cyclic:2 ...",   // arguments as given
//!   "subcommand": "probe",
//!   "parameters": { ... },                      // parsed inputs
//!   "budget": { "limit": 4194304, "used": 256 },
//!   "result": { ... },                          // absent on error
//!   "error": { "kind": "budget-exceeded", "message": "...", "required": 43046721 },
//!   "exit_code": 0,
//!   "elapsed_ms": 1.25
//! }
//! ```
//!
//! Group elements are written by label and field elements in the same text
//! form the inputs accept, so any witness can be parsed back and rechecked.

use kaplansky_core::{GroupRingElement, GroupRingMatrix};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub subcommand: &'static str,
    pub parameters: Value,
    pub budget: BudgetUsage,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorReport>,
    pub exit_code: i32,
    pub elapsed_ms: f64,
}

#[derive(Debug, Serialize)]
pub struct BudgetUsage {
    pub limit: u64,
    /// Enumeration steps actually taken, when the command counts them.
    pub used: Option<u64>,
}

#[derive(Debug, Serialize)]
pub struct ErrorReport {
    pub kind: &'static str,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub required: Option<u64>,
}

/// `[[label, coefficient], ...]` in group-element order.
fn element_terms(e: &GroupRingElement) -> Value {
    let terms: Vec<Value> = e
        .terms()
        .map(|(g, c)| json!([e.group().label(g), e.field().format_elem(c)]))
        .collect();
    Value::Array(terms)
}

pub fn element_json(e: &GroupRingElement) -> Value {
    json!({ "text": e.to_string(), "terms": element_terms(e) })
}

/// `[[row, col, label, coefficient], ...]`, 1-based.
pub fn matrix_json(m: &GroupRingMatrix) -> Value {
    let quads: Vec<Value> = m
        .quadruples()
        .into_iter()
        .map(|(i, j, g, c)| json!([i, j, g, c]))
        .collect();
    Value::Array(quads)
}
