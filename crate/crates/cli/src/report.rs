use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::command::Command;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    PropertyFailed,
    InputError,
    CapExceeded,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::PropertyFailed => 1,
            Status::InputError => 2,
            Status::CapExceeded => 3,
        }
    }
}

/// Result of one command: the command itself, a digest of its input, the
/// named checks that were run and the structured result.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: Command,
    /// SHA-256 of the input file, or of the command's JSON when it reads
    /// no file.
    pub input_digest: String,
    pub status: Status,
    #[serde(default)]
    pub checks: BTreeMap<String, bool>,
    #[serde(default)]
    pub result: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> Result<Report, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Plain-text rendering with the same content as the JSON.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let status = serde_json::to_value(self.status).expect("status serializes");
        writeln!(out, "command: {}", self.command).unwrap();
        writeln!(out, "input digest: {}", self.input_digest).unwrap();
        writeln!(out, "status: {}", status.as_str().unwrap_or_default()).unwrap();
        if let Some(e) = &self.error {
            writeln!(out, "error: {e}").unwrap();
        }
        if !self.checks.is_empty() {
            writeln!(out, "checks:").unwrap();
            for (name, ok) in &self.checks {
                writeln!(out, "  {name}: {}", if *ok { "pass" } else { "FAIL" }).unwrap();
            }
        }
        if !self.result.is_null() {
            writeln!(out, "result:").unwrap();
            render(&self.result, 1, &mut out);
        }
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("null".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            let parts: Vec<String> = items.iter().filter_map(scalar).collect();
            Some(format!("[{}]", parts.join(", ")))
        }
        _ => None,
    }
}

fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match scalar(x) {
                    Some(s) => writeln!(out, "{pad}{k}: {s}").unwrap(),
                    None => {
                        writeln!(out, "{pad}{k}:").unwrap();
                        render(x, indent + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                match scalar(x) {
                    Some(s) => writeln!(out, "{pad}[{i}] {s}").unwrap(),
                    None => {
                        writeln!(out, "{pad}[{i}]").unwrap();
                        render(x, indent + 1, out);
                    }
                }
            }
        }
        other => writeln!(out, "{pad}{}", scalar(other).unwrap_or_default()).unwrap(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::command::Space;
    use serde_json::json;

    fn sample() -> Report {
        Report {
            command: Command::Cohomology { space: Space::Circle, level: 3 },
            input_digest: digest(b"x"),
            status: Status::Ok,
            checks: BTreeMap::from([("exact".to_string(), true)]),
            result: json!({"h0": {"rank": 1, "torsion": []}, "parts": [{"lo": "0"}], "dims": [1, 2]}),
            error: None,
        }
    }

    #[test]
    fn json_round_trip() {
        let r = sample();
        assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
    }

    #[test]
    fn text_has_every_leaf() {
        let t = sample().to_text();
        assert!(t.contains("command: cohomology circle --level 3"));
        assert!(t.contains("exact: pass"));
        assert!(t.contains("rank: 1"));
        assert!(t.contains("torsion: []"));
        assert!(t.contains("lo: 0"));
        assert!(t.contains("dims: [1, 2]"));
    }

    #[test]
    fn failed_check_renders_and_exits_1() {
        let mut r = sample();
        r.checks.insert("bijective".into(), false);
        r.status = Status::PropertyFailed;
        assert!(r.to_text().contains("bijective: FAIL"));
        assert_eq!(r.status.exit_code(), 1);
        assert!(r.to_json().contains("\"property-failed\""));
        assert_eq!([Status::Ok, Status::InputError, Status::CapExceeded].map(Status::exit_code), [0, 2, 3]);
    }

    #[test]
    fn sha256_of_empty_input() {
        assert_eq!(digest(b""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    }
}
