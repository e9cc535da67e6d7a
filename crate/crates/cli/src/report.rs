//! Ordered key/value reports and their two renderings.

use knotforms::{Int, IntMatrix};
use num_traits::ToPrimitive;
use serde_json::{Map, Number, Value as Json};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Clone, Debug)]
pub enum Value {
    Text(String),
    Int(Int),
    Bool(bool),
    Matrix(IntMatrix),
    List(Vec<String>),
    Table { headers: Vec<&'static str>, rows: Vec<Vec<String>> },
}

#[derive(Clone, Debug)]
struct Entry {
    key: &'static str,
    label: &'static str,
    value: Value,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    entries: Vec<Entry>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, key: &'static str, value: Value) -> &mut Self {
        self.entries.push(Entry { key, label: key, value });
        self
    }

    /// Entry whose text label differs from its machine key.
    pub fn push_labeled(&mut self, key: &'static str, label: &'static str, value: Value) -> &mut Self {
        self.entries.push(Entry { key, label, value });
        self
    }

    pub fn text(&mut self, key: &'static str, s: impl Into<String>) -> &mut Self {
        self.push(key, Value::Text(s.into()))
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => {
                let mut out = String::new();
                self.write_text(&mut out);
                out
            }
            Format::Machine => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
                s.push('\n');
                s
            }
        }
    }

    fn write_text(&self, out: &mut String) {
        for e in &self.entries {
            match &e.value {
                Value::Matrix(m) => {
                    out.push_str(&format!("{}:", e.label));
                    if m.is_empty() {
                        out.push_str(" []\n");
                    } else {
                        out.push('\n');
                        for line in matrix_lines(m) {
                            out.push_str(&format!("  {line}\n"));
                        }
                    }
                }
                Value::Table { headers, rows } => {
                    out.push_str(&format!("{}:\n", e.label));
                    for line in table_lines(headers, rows) {
                        out.push_str(&format!("  {}\n", line.trim_end()));
                    }
                }
                v => out.push_str(&format!("{}: {}\n", e.label, scalar_text(v))),
            }
        }
    }

    pub fn to_json(&self) -> Json {
        let mut map = Map::new();
        for e in &self.entries {
            map.insert(e.key.to_string(), value_json(&e.value));
        }
        Json::Object(map)
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::Text(s) => s.clone(),
        Value::Int(n) => n.to_string(),
        Value::Bool(b) => if *b { "yes" } else { "no" }.to_string(),
        Value::List(xs) if xs.is_empty() => "none".to_string(),
        Value::List(xs) => xs.join(", "),
        _ => unreachable!("not a scalar"),
    }
}

fn int_json(n: &Int) -> Json {
    match n.to_i64() {
        Some(v) => Json::Number(Number::from(v)),
        None => Json::String(n.to_string()),
    }
}

fn value_json(v: &Value) -> Json {
    match v {
        Value::Text(s) => Json::String(s.clone()),
        Value::Int(n) => int_json(n),
        Value::Bool(b) => Json::Bool(*b),
        Value::Matrix(m) => Json::Array(
            m.to_rows().iter().map(|row| Json::Array(row.iter().map(int_json).collect())).collect(),
        ),
        Value::List(xs) => Json::Array(xs.iter().cloned().map(Json::String).collect()),
        Value::Table { headers, rows } => Json::Array(
            rows.iter()
                .map(|row| {
                    let mut m = Map::new();
                    for (h, c) in headers.iter().zip(row) {
                        m.insert(h.to_string(), Json::String(c.clone()));
                    }
                    Json::Object(m)
                })
                .collect(),
        ),
    }
}

fn matrix_lines(m: &IntMatrix) -> Vec<String> {
    let rows: Vec<Vec<String>> = m.to_rows().iter().map(|r| r.iter().map(Int::to_string).collect()).collect();
    let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
    rows.iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(|c| format!("{c:>width$}")).collect();
            format!("[ {} ]", cells.join(" "))
        })
        .collect()
}

fn table_lines(headers: &[&'static str], rows: &[Vec<String>]) -> Vec<String> {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let fmt_row = |cells: Vec<String>| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect::<Vec<_>>()
            .join("  ")
    };
    let mut out = vec![fmt_row(headers.iter().map(|h| h.to_string()).collect())];
    out.extend(rows.iter().map(|r| fmt_row(r.clone())));
    out
}
