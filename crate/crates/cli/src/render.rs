use serde_json::Value;

use fanoforge_core::checks::VerifyReport;
use fanoforge_core::enumerate::TableFormat;

pub enum Output {
    /// Already rendered in the requested format.
    Rendered(String),
    Object(Value),
    /// A JSON array of flat objects.
    Rows(Value),
    Verify(VerifyReport),
}

impl Output {
    pub fn object(v: Value) -> Self {
        Output::Object(v)
    }

    pub fn rows(v: Value) -> Self {
        Output::Rows(v)
    }

    pub fn render(&self, format: TableFormat) -> String {
        match self {
            Output::Rendered(s) => s.clone(),
            Output::Object(v) => match format {
                TableFormat::Json => pretty(v),
                _ => {
                    let rows = object_cells(v).into_iter().map(|(k, c)| vec![k, c]).collect();
                    grid(format, vec!["key".into(), "value".into()], rows)
                }
            },
            Output::Rows(v) => match format {
                TableFormat::Json => pretty(v),
                _ => {
                    let items = v.as_array().cloned().unwrap_or_default();
                    let header: Vec<String> = items
                        .first()
                        .and_then(Value::as_object)
                        .map(|o| o.keys().cloned().collect())
                        .unwrap_or_default();
                    let rows = items
                        .iter()
                        .map(|it| header.iter().map(|k| cell(&it[k])).collect())
                        .collect();
                    grid(format, header, rows)
                }
            },
            Output::Verify(rep) => match format {
                TableFormat::Json => pretty(&serde_json::to_value(rep).expect("report serializes")),
                TableFormat::Text => {
                    let mut out = String::new();
                    for c in &rep.checks {
                        out.push_str(&format!("{} {}  {}\n", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail));
                    }
                    let n = rep.checks.iter().filter(|c| c.passed).count();
                    out.push_str(&format!(
                        "verify {}: {n}/{} checks pass (seed {}, {} trials)\n",
                        rep.target,
                        rep.checks.len(),
                        rep.seed,
                        rep.trials
                    ));
                    out
                }
                _ => {
                    let rows = rep
                        .checks
                        .iter()
                        .map(|c| vec![c.name.clone(), c.passed.to_string(), c.detail.clone()])
                        .collect();
                    grid(format, vec!["check".into(), "passed".into(), "detail".into()], rows)
                }
            },
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn object_cells(v: &Value) -> Vec<(String, String)> {
    match v.as_object() {
        Some(o) => o.iter().map(|(k, v)| (k.clone(), cell(v))).collect(),
        None => vec![("value".into(), cell(v))],
    }
}

fn grid(format: TableFormat, header: Vec<String>, rows: Vec<Vec<String>>) -> String {
    match format {
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&header).expect("in-memory write");
            for r in &rows {
                w.write_record(r).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("flush to vec")).expect("utf8 input")
        }
        TableFormat::Markdown => {
            let mut out = format!("| {} |\n|{}\n", header.join(" | "), "---|".repeat(header.len()));
            for r in &rows {
                out.push_str(&format!("| {} |\n", r.join(" | ")));
            }
            out
        }
        _ => {
            let mut out = String::new();
            if header == ["key", "value"] {
                for r in &rows {
                    out.push_str(&format!("{}: {}\n", r[0], r[1]));
                }
            } else {
                out.push_str(&header.join("  "));
                out.push('\n');
                for r in &rows {
                    out.push_str(&r.join("  "));
                    out.push('\n');
                }
            }
            out
        }
    }
}
