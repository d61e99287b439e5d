//! The report envelope shared by every command, with deterministic JSON and
//! CSV renderings.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Partial,
}

impl Status {
    /// Fail dominates partial, which dominates pass.
    pub fn combine(self, other: Status) -> Status {
        match (self, other) {
            (Status::Fail, _) | (_, Status::Fail) => Status::Fail,
            (Status::Partial, _) | (_, Status::Partial) => Status::Partial,
            _ => Status::Pass,
        }
    }

    pub fn from_pass(pass: bool) -> Status {
        if pass {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Fail => 1,
            _ => 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Provenance {
    pub seed: u64,
    pub budget: u64,
    pub samples: usize,
    /// Field moduli used, keyed by `m`, as hex.
    pub modulus: BTreeMap<u32, String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub results: Value,
    pub provenance: Provenance,
    pub status: Status,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Tabular results (`rows` or `checks`) become one CSV row each;
    /// anything else is flattened to `key,value` pairs.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let table = ["rows", "checks"]
            .iter()
            .find_map(|k| self.results.get(*k).and_then(Value::as_array));
        match table {
            Some(rows) => {
                let mut header: Vec<String> = Vec::new();
                for row in rows {
                    for key in row.as_object().into_iter().flat_map(|o| o.keys()) {
                        if !header.contains(key) {
                            header.push(key.clone());
                        }
                    }
                }
                w.write_record(&header).unwrap();
                for row in rows {
                    let rec: Vec<String> = header
                        .iter()
                        .map(|h| cell(row.get(h).unwrap_or(&Value::Null)))
                        .collect();
                    w.write_record(&rec).unwrap();
                }
            }
            None => {
                w.write_record(["key", "value"]).unwrap();
                w.write_record(["command", self.command.as_str()]).unwrap();
                w.write_record(["status", cell(&serde_json::to_value(self.status).unwrap()).as_str()])
                    .unwrap();
                if let Some(obj) = self.results.as_object() {
                    for (k, v) in obj {
                        w.write_record([k.as_str(), cell(v).as_str()]).unwrap();
                    }
                }
            }
        }
        String::from_utf8(w.into_inner().unwrap()).unwrap()
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
