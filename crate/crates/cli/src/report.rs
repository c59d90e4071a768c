//! Machine-readable and human-readable command reports.
//!
//! The JSON rendering is deterministic: field order is fixed by the struct,
//! collections are ordered, and rationals are `"p/q"` strings in lowest
//! terms. Timing appears only in the human rendering so that identical
//! inputs and seeds produce byte-identical JSON.

use diamond_core::exactmath::{format_rational, Rational, RationalMatrix};
use diamond_core::indexcalc::Functional;
use diamond_core::liealg::Subspace;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub input: InputEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub verdict: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip)]
    pub elapsed_ms: u128,
}

#[derive(Debug, Serialize)]
pub struct InputEcho {
    pub source: String,
    pub digest: String,
}

impl InputEcho {
    pub fn new(source: impl Into<String>, payload: &str) -> Self {
        let mut hasher = Sha256::new();
        hasher.update(payload.as_bytes());
        InputEcho { source: source.into(), digest: format!("sha256:{:x}", hasher.finalize()) }
    }
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        out.push_str(&format!("input:   {} ({})\n", self.input.source, self.input.digest));
        if let Some(seed) = self.seed {
            out.push_str(&format!("seed:    {seed}\n"));
        }
        out.push_str("verdict:\n");
        render_value(&self.verdict, 2, &mut out);
        if let Some(witness) = &self.witness {
            out.push_str("witness:\n");
            render_value(witness, 2, &mut out);
        }
        out.push_str(&format!("elapsed: {} ms\n", self.elapsed_ms));
        out
    }
}

fn render_value(value: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                match v {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_value(v, indent + 2, out);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", scalar_to_string(v))),
                }
            }
        }
        Value::Array(items) => {
            for v in items {
                match v {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}-\n"));
                        render_value(v, indent + 2, out);
                    }
                    _ => out.push_str(&format!("{pad}- {}\n", scalar_to_string(v))),
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar_to_string(other))),
    }
}

fn scalar_to_string(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn rational_vec_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(|r| Value::String(format_rational(r))).collect())
}

pub fn matrix_json(m: &RationalMatrix) -> Value {
    Value::Array((0..m.rows).map(|i| rational_vec_json(m.row(i))).collect())
}

pub fn subspace_json(s: &Subspace) -> Value {
    json!({
        "ambient_dim": s.ambient_dim(),
        "dim": s.dim(),
        "basis": Value::Array(s.basis().iter().map(|v| rational_vec_json(v)).collect()),
    })
}

pub fn functional_json(f: &Functional) -> Value {
    rational_vec_json(&f.coords)
}
