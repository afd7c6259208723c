//! Machine-readable output records and their three renderings.
//!
//! Every command emits one or more `OutputRecord`s. JSON mode prints one
//! compact object per line; CSV mode prints a header row and one line per
//! result entry; table mode prints an aligned human view. All renderings are
//! deterministic: inputs are sorted maps, result order is fixed by the
//! command, and floats print in shortest round-trip form.

use std::collections::BTreeMap;

use serde::Serialize;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Serialize)]
pub struct OutputRecord {
    pub schema_version: &'static str,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<String>,
    pub inputs: BTreeMap<String, String>,
    pub results: Vec<ResultEntry>,
}

#[derive(Debug, Serialize)]
pub struct ResultEntry {
    pub name: String,
    /// `None` marks a degenerate or undefined value (serializes to null).
    pub value: Option<f64>,
    pub unit: &'static str,
    pub provenance: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl ResultEntry {
    pub fn new(name: impl Into<String>, value: f64, unit: &'static str) -> Self {
        Self {
            name: name.into(),
            value: Some(value),
            unit,
            provenance: "analytic",
            note: None,
        }
    }

    pub fn oracle(name: impl Into<String>, value: f64, unit: &'static str) -> Self {
        Self {
            provenance: "oracle",
            ..Self::new(name, value, unit)
        }
    }

    pub fn degenerate(name: impl Into<String>, unit: &'static str, note: &str) -> Self {
        Self {
            name: name.into(),
            value: None,
            unit,
            provenance: "analytic",
            note: Some(note.to_string()),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Debug, Serialize)]
pub struct ErrorRecord {
    pub schema_version: &'static str,
    pub command: String,
    pub error: ErrorBody,
}

#[derive(Debug, Serialize)]
pub struct ErrorBody {
    pub kind: &'static str,
    pub message: String,
}

impl ErrorRecord {
    pub fn from_core(command: &str, err: &erepr_core::Error) -> Self {
        let kind = match err {
            erepr_core::Error::Config(_) => "configuration",
            erepr_core::Error::Domain(_) => "domain",
            erepr_core::Error::Validation(_) => "validation",
            erepr_core::Error::Solver(_) => "solver",
        };
        Self {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            error: ErrorBody {
                kind,
                message: err.to_string(),
            },
        }
    }
}

fn csv_escape(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

pub fn float_str(v: f64) -> String {
    if v != 0.0 && (v.abs() < 1e-4 || v.abs() >= 1e7) {
        format!("{v:e}")
    } else {
        format!("{v}")
    }
}

pub fn render_records(records: &[OutputRecord], format: Format) -> String {
    match format {
        Format::Json => {
            let mut out = String::new();
            for record in records {
                out.push_str(&serde_json::to_string(record).expect("records are serializable"));
                out.push('\n');
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("schema_version,command,name,value,unit,provenance,note\n");
            for record in records {
                for entry in &record.results {
                    let value = entry.value.map(float_str).unwrap_or_default();
                    out.push_str(&format!(
                        "{},{},{},{},{},{},{}\n",
                        record.schema_version,
                        csv_escape(&record.command),
                        csv_escape(&entry.name),
                        value,
                        csv_escape(entry.unit),
                        entry.provenance,
                        csv_escape(entry.note.as_deref().unwrap_or("")),
                    ));
                }
            }
            out
        }
        Format::Table => {
            let mut out = String::new();
            for record in records {
                out.push_str(&format!("command: {}\n", record.command));
                if let Some(ts) = &record.timestamp {
                    out.push_str(&format!("timestamp: {ts}\n"));
                }
                if !record.inputs.is_empty() {
                    let inputs: Vec<String> = record
                        .inputs
                        .iter()
                        .map(|(k, v)| format!("{k}={v}"))
                        .collect();
                    out.push_str(&format!("inputs: {}\n", inputs.join(" ")));
                }
                let name_width = record
                    .results
                    .iter()
                    .map(|e| e.name.len())
                    .chain(std::iter::once("name".len()))
                    .max()
                    .unwrap_or(4);
                let value_width = record
                    .results
                    .iter()
                    .map(|e| e.value.map(float_str).unwrap_or_else(|| "-".into()).len())
                    .chain(std::iter::once("value".len()))
                    .max()
                    .unwrap_or(5);
                out.push_str(&format!(
                    "{:<name_width$}  {:>value_width$}  {:<8}  {:<10}\n",
                    "name", "value", "unit", "provenance"
                ));
                for entry in &record.results {
                    let value = entry
                        .value
                        .map(float_str)
                        .unwrap_or_else(|| "-".to_string());
                    out.push_str(&format!(
                        "{:<name_width$}  {:>value_width$}  {:<8}  {:<10}",
                        entry.name, value, entry.unit, entry.provenance
                    ));
                    if let Some(note) = &entry.note {
                        out.push_str(&format!("  # {note}"));
                    }
                    out.push('\n');
                }
                out.push('\n');
            }
            out
        }
    }
}

pub fn render_error(record: &ErrorRecord, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string(record).expect("error record is serializable");
            s.push('\n');
            s
        }
        Format::Csv => format!(
            "schema_version,command,error_kind,error_message\n{},{},{},{}\n",
            record.schema_version,
            csv_escape(&record.command),
            record.error.kind,
            csv_escape(&record.error.message),
        ),
        Format::Table => format!(
            "command: {}\nerror ({}): {}\n",
            record.command, record.error.kind, record.error.message
        ),
    }
}
