//! Line-oriented `key: value` output, or one JSON object with `--json`.

use serde_json::{Map, Value};

#[derive(Default)]
pub struct Report {
    fields: Vec<(String, Value)>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn put(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.fields.push((key.to_string(), value.into()));
        self
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let map: Map<String, Value> = self.fields.iter().cloned().collect();
            return format!("{}\n", Value::Object(map));
        }
        let mut out = String::new();
        for (key, value) in &self.fields {
            match value {
                Value::Array(items) if items.iter().all(Value::is_object) => {
                    for item in items {
                        out.push_str(&format!("{key}: {}\n", inline(item)));
                    }
                }
                other => out.push_str(&format!("{key}: {}\n", inline(other))),
            }
        }
        out
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(inline).collect::<Vec<_>>().join(" "),
        Value::Object(map) => map.iter().map(|(k, v)| format!("{k}={}", inline(v))).collect::<Vec<_>>().join(" "),
        Value::Bool(b) => if *b { "yes".into() } else { "no".into() },
        Value::Null => "-".into(),
        Value::Number(n) => n.to_string(),
    }
}
