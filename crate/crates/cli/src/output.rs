//! Rendering of command results as JSON, CSV or plain text.

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// A command result: structured data plus a human-readable rendering.
pub struct Report {
    pub data: Value,
    pub text: String,
}

impl Report {
    pub fn new<T: Serialize>(data: &T, text: impl Into<String>) -> Report {
        Report {
            data: serde_json::to_value(data).expect("results serialize to JSON"),
            text: text.into(),
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.data).expect("JSON value serializes");
                s.push('\n');
                s
            }
            Format::Csv => to_csv(&self.data),
            Format::Text => {
                let mut s = self.text.clone();
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                s
            }
        }
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Bool(_) | Value::Number(_) => v.to_string(),
        _ => serde_json::to_string(v).expect("JSON value serializes"),
    }
}

/// Objects become one row (keys as header); arrays of objects become one row
/// per element. Nested values are embedded as JSON text.
fn to_csv(v: &Value) -> String {
    let rows: Vec<&Value> = match v {
        Value::Array(items) => items.iter().collect(),
        other => vec![other],
    };
    let mut header: Vec<String> = Vec::new();
    for row in &rows {
        match row {
            Value::Object(map) => {
                for k in map.keys() {
                    if !header.contains(k) {
                        header.push(k.clone());
                    }
                }
            }
            _ if header.is_empty() => header.push("value".into()),
            _ => {}
        }
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&header).expect("in-memory CSV write");
    for row in rows {
        let record: Vec<String> = match row {
            Value::Object(map) => header
                .iter()
                .map(|k| map.get(k).map(cell).unwrap_or_default())
                .collect(),
            other => vec![cell(other)],
        };
        w.write_record(&record).expect("in-memory CSV write");
    }
    w.flush().expect("in-memory CSV flush");
    String::from_utf8(w.into_inner().expect("in-memory CSV")).expect("CSV is UTF-8")
}
