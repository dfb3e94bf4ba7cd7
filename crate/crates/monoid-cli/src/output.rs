//! Result envelope. JSON mode wraps every command in the same four-field
//! object; keys come out sorted because serde_json's map is ordered.

use std::time::Duration;

use serde_json::{json, Map, Value};

use crate::commands::Outcome;

pub fn emit(json_mode: bool, stable: bool, outcome: Outcome, elapsed: Duration) {
    if !json_mode {
        println!("{}", outcome.human);
        return;
    }
    let mut envelope = Map::new();
    envelope.insert("command".into(), json!(outcome.name));
    envelope.insert("parameters".into(), Value::Object(outcome.parameters));
    envelope.insert("result".into(), outcome.result);
    if !stable {
        envelope.insert("elapsed_ms".into(), json!(elapsed.as_millis() as u64));
    }
    println!("{}", Value::Object(envelope));
}
