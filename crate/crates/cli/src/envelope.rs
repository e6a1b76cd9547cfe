//! Stable output envelope shared by every subcommand.
//!
//! JSON output is produced through `serde_json::Value`, whose object maps
//! are ordered, so serialize → parse → serialize is byte-identical.

use serde_json::{Map, Value};

pub const FORMAT_VERSION: u64 = 1;

#[derive(Debug)]
pub struct Envelope {
    pub command: String,
    pub root_system: String,
    pub parameters: Vec<(String, Value)>,
    pub rows: Vec<Value>,
    /// Pre-rendered text lines for the human-readable mode.
    pub text: Vec<String>,
}

impl Envelope {
    pub fn new(command: &str, root_system: &str) -> Self {
        Envelope {
            command: command.to_string(),
            root_system: root_system.to_string(),
            parameters: Vec::new(),
            rows: Vec::new(),
            text: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.parameters.push((key.to_string(), value.into()));
        self
    }

    pub fn to_json(&self) -> Value {
        let mut params = Map::new();
        for (k, v) in &self.parameters {
            params.insert(k.clone(), v.clone());
        }
        let mut root = Map::new();
        root.insert("format_version".into(), Value::from(FORMAT_VERSION));
        root.insert("command".into(), Value::from(self.command.clone()));
        root.insert("root_system".into(), Value::from(self.root_system.clone()));
        root.insert("parameters".into(), Value::Object(params));
        root.insert("rows".into(), Value::Array(self.rows.clone()));
        Value::Object(root)
    }
}
