//! The JSON envelope emitted by every command:
//! `{"command", "inputs", "result", "checks": [{"name", "pass"}]}`.
//!
//! Field order is fixed and every number is an exact integer, so serializing,
//! parsing and serializing again is byte-identical.

use std::str::FromStr;

use hnsplit::{BigInt, HNPolygon};
use serde_json::{Map, Number, Value};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Envelope {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub checks: Vec<Check>,
}

impl Envelope {
    pub fn new(command: &str, inputs: Value, result: Value) -> Self {
        Self { command: command.to_string(), inputs, result, checks: Vec::new() }
    }

    pub fn check(&mut self, name: &str, pass: bool) {
        self.checks.push(Check { name: name.to_string(), pass });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_value(&self) -> Value {
        let checks = self
            .checks
            .iter()
            .map(|c| {
                let mut m = Map::new();
                m.insert("name".into(), Value::String(c.name.clone()));
                m.insert("pass".into(), Value::Bool(c.pass));
                Value::Object(m)
            })
            .collect();
        let mut m = Map::new();
        m.insert("command".into(), Value::String(self.command.clone()));
        m.insert("inputs".into(), self.inputs.clone());
        m.insert("result".into(), self.result.clone());
        m.insert("checks".into(), Value::Array(checks));
        Value::Object(m)
    }

    /// Compact single-line JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_value()).expect("envelope values always serialize")
    }
}

/// Exact JSON integer for an arbitrary-size value.
pub fn big(x: &BigInt) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("decimal integers are valid JSON numbers"))
}

pub fn bigs<'a>(xs: impl IntoIterator<Item = &'a BigInt>) -> Value {
    Value::Array(xs.into_iter().map(big).collect())
}

/// Polygon pieces as `{rank, degree, slope_numerator, slope_denominator, label}`.
pub fn polygon_value(p: &HNPolygon) -> Value {
    Value::Array(
        p.pieces()
            .iter()
            .map(|piece| {
                let (num, den) = piece.slope();
                let mut m = Map::new();
                m.insert("rank".into(), big(piece.rank()));
                m.insert("degree".into(), big(piece.degree()));
                m.insert("slope_numerator".into(), big(&num));
                m.insert("slope_denominator".into(), big(&den));
                m.insert("label".into(), Value::String(piece.label().to_string()));
                Value::Object(m)
            })
            .collect(),
    )
}

/// `{"error": {"kind", "message"}}` on one line.
pub fn error_line(kind: &str, message: &str) -> String {
    let mut inner = Map::new();
    inner.insert("kind".into(), Value::String(kind.to_string()));
    inner.insert("message".into(), Value::String(message.to_string()));
    let mut outer = Map::new();
    outer.insert("error".into(), Value::Object(inner));
    serde_json::to_string(&Value::Object(outer)).expect("error values always serialize")
}
