//! CSV and human-readable renderings, derived from the JSON form.

use std::io::{self, Write};

use nsring_core::claims::ClaimRow;
use serde::Serialize;
use serde_json::Value;

use crate::{AnalyzeReport, Ci3Report, GlueReport, VerifySummary};
use nsring_core::index::IndexReport;

/// Flattens a JSON value into one cell: arrays join with `;`, objects
/// become `key:value` pairs.
pub fn flatten(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Bool(_) | Value::Number(_) => v.to_string(),
        Value::Array(items) => items.iter().map(flatten_inner).collect::<Vec<_>>().join(";"),
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| format!("{k}:{}", flatten_inner(v)))
            .collect::<Vec<_>>()
            .join(";"),
    }
}

// nested containers use `:` and `/` so the outer `;` stays unambiguous
fn flatten_inner(v: &Value) -> String {
    match v {
        Value::Array(items) => items.iter().map(flatten_inner).collect::<Vec<_>>().join("/"),
        Value::Object(map) => map.values().map(flatten_inner).collect::<Vec<_>>().join(":"),
        other => flatten(other),
    }
}

pub trait Human: Serialize {
    /// Rows for CSV output; a top-level object is one row.
    fn csv_rows(&self) -> Vec<Value> {
        match serde_json::to_value(self).expect("serializable") {
            Value::Array(rows) => rows,
            other => vec![other],
        }
    }

    fn human(&self, out: &mut dyn Write) -> io::Result<()> {
        for row in self.csv_rows() {
            match row {
                Value::Object(map) => {
                    let width = map.keys().map(|k| k.len()).max().unwrap_or(0);
                    for (k, v) in &map {
                        writeln!(out, "{k:<width$}  {}", flatten(v))?;
                    }
                }
                other => writeln!(out, "{}", flatten(&other))?,
            }
        }
        Ok(())
    }
}

impl Human for AnalyzeReport {}
impl Human for IndexReport {}
impl Human for GlueReport {}

impl Human for Ci3Report {
    fn csv_rows(&self) -> Vec<Value> {
        let gens = Value::from(self.generators.clone());
        serde_json::to_value(&self.structures)
            .expect("serializable")
            .as_array()
            .cloned()
            .unwrap_or_default()
            .into_iter()
            .map(|mut row| {
                if let Value::Object(map) = &mut row {
                    map.insert("generators".into(), gens.clone());
                }
                row
            })
            .collect()
    }

    fn human(&self, out: &mut dyn Write) -> io::Result<()> {
        let gens = flatten(&Value::from(self.generators.clone()));
        writeln!(out, "generators  {gens}")?;
        for s in &self.structures {
            let st = &s.structure;
            writeln!(
                out,
                "a={} b={} c={}  p={} x={} y={}  a={}*{}+{}*{}  f={}  N_a={} N_b={} N_c={}",
                st.roles.a, st.roles.b, st.roles.c, st.p, st.x, st.y,
                st.a_prime, st.x, st.a_dprime, st.y, s.frobenius, s.n_a, s.n_b, s.n_c
            )?;
        }
        Ok(())
    }
}

impl Human for VerifySummary {
    fn csv_rows(&self) -> Vec<Value> {
        serde_json::to_value(&self.checks)
            .expect("serializable")
            .as_array()
            .cloned()
            .unwrap_or_default()
    }

    fn human(&self, out: &mut dyn Write) -> io::Result<()> {
        for c in &self.checks {
            let status = if c.ok() { "PASS" } else { "FAIL" };
            write!(out, "{status}  {:<24} {}/{}", c.name, c.passed, c.total)?;
            match &c.first_failure {
                Some(f) => writeln!(out, "  first failure: {f}")?,
                None => writeln!(out)?,
            }
        }
        writeln!(out, "seed {}: {}", self.seed, if self.ok { "ok" } else { "MISMATCH" })
    }
}

impl Human for Vec<ClaimRow> {
    fn human(&self, out: &mut dyn Write) -> io::Result<()> {
        for r in self {
            let mark = if r.matched { "ok " } else { "BAD" };
            writeln!(out, "{mark}  {}: expected {}, computed {}", r.claim, r.expected, r.computed)?;
        }
        Ok(())
    }
}

pub fn write_csv<T: Human>(value: &T, out: &mut dyn Write) -> io::Result<()> {
    let rows = value.csv_rows();
    let mut w = csv::Writer::from_writer(out);
    let mut header: Vec<String> = Vec::new();
    for row in &rows {
        if let Value::Object(map) = row {
            for k in map.keys() {
                if !header.contains(k) {
                    header.push(k.clone());
                }
            }
        }
    }
    if header.is_empty() {
        for row in &rows {
            w.write_record([flatten(row)])?;
        }
    } else {
        w.write_record(&header)?;
        for row in &rows {
            let cells = header.iter().map(|k| row.get(k).map(flatten).unwrap_or_default());
            w.write_record(cells)?;
        }
    }
    w.flush()
}
