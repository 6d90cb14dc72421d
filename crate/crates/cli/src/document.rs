use std::fmt::Write as _;
use std::time::Duration;

use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u64 = 1;

/// Output of one invocation. Keys are emitted in sorted order.
pub struct Document {
    fields: Map<String, Value>,
}

impl Document {
    pub fn new(command: &str, input: Value) -> Self {
        let mut fields = Map::new();
        fields.insert("schema_version".into(), json!(SCHEMA_VERSION));
        fields.insert("command".into(), json!(command));
        fields.insert("input".into(), input);
        Document { fields }
    }

    pub fn with(mut self, key: &str, value: Value) -> Self {
        self.fields.insert(key.into(), value);
        self
    }

    pub fn with_timing(self, elapsed: Duration) -> Self {
        let ms = elapsed.as_millis() as u64;
        self.with("timing", json!({ "elapsed_ms": ms }))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&Value::Object(self.fields.clone())).expect("JSON values serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (key, value) in &self.fields {
            if key == "schema_version" {
                continue;
            }
            render(&mut out, key, value, 0);
        }
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            Some(format!("[{}]", items.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn render(out: &mut String, key: &str, value: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    if let Some(s) = scalar(value) {
        let _ = writeln!(out, "{pad}{key}: {s}");
        return;
    }
    let _ = writeln!(out, "{pad}{key}:");
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                render(out, k, v, depth + 1);
            }
        }
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                if let Some(line) = verdict_line(item) {
                    let _ = writeln!(out, "{pad}  {line}");
                } else {
                    render(out, &format!("[{i}]"), item, depth + 1);
                }
            }
        }
        _ => unreachable!("scalars handled above"),
    }
}

/// One-line rendering for verdicts and suite cases.
fn verdict_line(item: &Value) -> Option<String> {
    let obj = item.as_object()?;
    if let (Some(name), Some(status), Some(detail)) = (obj.get("name"), obj.get("status"), obj.get("detail")) {
        return Some(format!("[{}] {}: {}", status.as_str()?, name.as_str()?, detail.as_str()?));
    }
    if let (Some(name), Some(passed), Some(expected), Some(computed)) =
        (obj.get("name"), obj.get("passed"), obj.get("expected"), obj.get("computed"))
    {
        let mark = if passed.as_bool()? { "pass" } else { "FAIL" };
        return Some(format!(
            "[{mark}] {}: expected {}, computed {}",
            name.as_str()?,
            expected.as_str()?,
            computed.as_str()?
        ));
    }
    None
}
