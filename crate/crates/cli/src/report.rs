//! Deterministic reports: canonical JSON values (keys sorted by the map
//! type, rationals as reduced "num/den" strings), the group fingerprint,
//! and a plain-text renderer for `--format pretty`.

use kottwitz_core::intmat::IntMat;
use kottwitz_core::root_datum::{FrobeniusAction, RootDatum};
use kottwitz_core::RatVec;
use num::{BigInt, BigRational, ToPrimitive};
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

/// Integers are JSON numbers while they fit; arbitrary precision falls back
/// to a decimal string rather than losing exactness.
pub fn int_value(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(n) => Value::from(n),
        None => Value::String(x.to_string()),
    }
}

pub fn int_vec_value(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int_value).collect())
}

/// Rationals are always "num/den" strings in lowest terms, "0/1" included.
pub fn rat_value(r: &BigRational) -> Value {
    Value::String(format!("{}/{}", r.numer(), r.denom()))
}

pub fn rat_vec_value(v: &RatVec) -> Value {
    Value::Array(v.components().iter().map(rat_value).collect())
}

pub fn matrix_value(m: &IntMat) -> Value {
    let rows: Vec<Value> = (0..m.rows)
        .map(|i| Value::Array((0..m.cols).map(|j| int_value(&m[(i, j)])).collect()))
        .collect();
    Value::Array(rows)
}

pub fn usize_vec_value(v: &[usize]) -> Value {
    Value::Array(v.iter().map(|&x| Value::from(x as u64)).collect())
}

/// Content hash of the canonical datum: the serialized lattice data alone,
/// independent of how the group was named or configured.
pub fn fingerprint(rd: &RootDatum, fr: &FrobeniusAction) -> String {
    let mut datum = Map::new();
    datum.insert(
        "coroots".into(),
        Value::Array(rd.coroots.iter().map(|r| int_vec_value(r)).collect()),
    );
    datum.insert("frobenius".into(), matrix_value(&fr.matrix));
    datum.insert("order".into(), Value::from(fr.order as u64));
    datum.insert("rank".into(), Value::from(rd.rank as u64));
    datum.insert(
        "roots".into(),
        Value::Array(rd.roots.iter().map(|r| int_vec_value(r)).collect()),
    );
    datum.insert("simple".into(), usize_vec_value(&rd.simple_indices));
    let text = Value::Object(datum).to_string();
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// The full report: command echo, fingerprint, inputs, normalization flags,
/// outputs, tool version.
pub fn assemble(
    command: &str,
    fingerprint: String,
    inputs: Map<String, Value>,
    outputs: Map<String, Value>,
    artin: &str,
) -> Value {
    let mut normalization = Map::new();
    normalization.insert("artin".into(), Value::String(artin.into()));
    let mut top = Map::new();
    top.insert("command".into(), Value::String(command.into()));
    top.insert("fingerprint".into(), Value::String(fingerprint));
    top.insert("inputs".into(), Value::Object(inputs));
    top.insert("normalization".into(), Value::Object(normalization));
    top.insert("outputs".into(), Value::Object(outputs));
    top.insert(
        "version".into(),
        Value::String(env!("CARGO_PKG_VERSION").into()),
    );
    Value::Object(top)
}

/// A structured failure for stderr: the kind fixes the exit code, the
/// message names the violated invariant or precondition.
pub fn diagnostic(kind: &str, message: &str, violations: &[String]) -> String {
    let mut error = Map::new();
    error.insert("kind".into(), Value::String(kind.into()));
    error.insert("message".into(), Value::String(message.into()));
    if !violations.is_empty() {
        error.insert(
            "violations".into(),
            Value::Array(violations.iter().map(|v| Value::String(v.clone())).collect()),
        );
    }
    let mut top = Map::new();
    top.insert("error".into(), Value::Object(error));
    let mut text = Value::Object(top).to_string();
    text.push('\n');
    text
}

/// Indented plain-text rendering of a report value.
pub fn pretty(value: &Value) -> String {
    let mut out = String::new();
    render(value, 0, &mut out);
    out
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Arrays of scalars (and of scalar arrays, e.g. matrices) print inline.
fn inline_text(v: &Value) -> Option<String> {
    match v {
        Value::Array(items) => {
            let parts: Vec<String> = items
                .iter()
                .map(|item| {
                    if is_scalar(item) {
                        Some(scalar_text(item))
                    } else {
                        inline_text(item)
                    }
                })
                .collect::<Option<_>>()?;
            Some(format!("[{}]", parts.join(", ")))
        }
        _ => None,
    }
}

fn render(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (key, val) in map {
                if is_scalar(val) {
                    out.push_str(&format!("{pad}{key}: {}\n", scalar_text(val)));
                } else if let Some(line) = inline_text(val) {
                    out.push_str(&format!("{pad}{key}: {line}\n"));
                } else {
                    out.push_str(&format!("{pad}{key}:\n"));
                    render(val, depth + 1, out);
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                if is_scalar(item) {
                    out.push_str(&format!("{pad}- {}\n", scalar_text(item)));
                } else if let Some(line) = inline_text(item) {
                    out.push_str(&format!("{pad}- {line}\n"));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    render(item, depth + 1, out);
                }
            }
        }
        scalar => {
            out.push_str(&format!("{pad}{}\n", scalar_text(scalar)));
        }
    }
}
