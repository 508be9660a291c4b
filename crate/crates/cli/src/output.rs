//! Rendering reports as JSON, CSV or aligned text.

use serde_json::Value;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Rows for CSV output when a report has a natural tabular form.
#[derive(Debug, Clone)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: &[&str], rows: Vec<Vec<String>>) -> Self {
        Table {
            headers: headers.iter().map(|h| h.to_string()).collect(),
            rows,
        }
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("null".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

/// Dotted keys and compact values, in document order.
fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) if !map.is_empty() => {
            for (k, child) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, child, out);
            }
        }
        Value::Array(items) if items.iter().all(|i| scalar(i).is_some()) => {
            let parts: Vec<String> = items.iter().filter_map(scalar).collect();
            out.push((prefix.to_string(), format!("[{}]", parts.join(", "))));
        }
        other => out.push((
            prefix.to_string(),
            scalar(other).unwrap_or_else(|| other.to_string()),
        )),
    }
}

pub fn render(value: &Value, table: Option<&Table>, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).map_err(|e| CliError::Internal(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        Format::Text => {
            let mut pairs = Vec::new();
            flatten("", value, &mut pairs);
            let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            Ok(pairs.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect())
        }
        Format::Csv => {
            let owned;
            let table = match table {
                Some(t) => t,
                None => {
                    let mut pairs = Vec::new();
                    flatten("", value, &mut pairs);
                    owned = Table::new(&["key", "value"], pairs.into_iter().map(|(k, v)| vec![k, v]).collect());
                    &owned
                }
            };
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| CliError::Internal(e.to_string());
            w.write_record(&table.headers).map_err(io)?;
            for row in &table.rows {
                w.write_record(row).map_err(io)?;
            }
            let bytes = w.into_inner().map_err(|e| CliError::Internal(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| CliError::Internal(e.to_string()))
        }
    }
}
