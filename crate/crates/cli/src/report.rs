//! Machine-readable command reports.

use serde::Serialize;
use serde_json::{json, Map, Value};

use crossmod_cochains::AltCochain;
use crossmod_lie::{Bilinear, LieAlgebra};
use crossmod_linalg::{format_q, Matrix, Q};

use crate::document::{AlgebraSpec, CochainSpec, FormSpec, MapSpec};

/// The outcome of a command.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    /// The answer is positive.
    Ok,
    /// The answer is a mathematical "no" or a check failed.
    Fail,
    /// The question could not be decided.
    Undecided,
}

impl Status {
    /// The process exit status: 0 for `ok`, 1 otherwise.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Fail | Status::Undecided => 1,
        }
    }

    /// `ok` when the condition holds and `fail` otherwise.
    pub fn from_bool(holds: bool) -> Status {
        if holds {
            Status::Ok
        } else {
            Status::Fail
        }
    }
}

/// A command report: the command, its arguments, a status and a payload.
/// Reports contain no timing or other run-dependent data, so equal inputs
/// give byte-identical output.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    /// The command name.
    pub command: String,
    /// The arguments as given.
    pub arguments: Value,
    /// The outcome.
    pub status: Status,
    /// Command-specific results.
    pub payload: Value,
}

impl Report {
    /// Pretty-printed JSON with sorted keys and a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

/// Builds a JSON object from key/value pairs.
pub(crate) fn object<const N: usize>(pairs: [(&str, Value); N]) -> Value {
    let mut m = Map::new();
    for (k, v) in pairs {
        m.insert(k.to_string(), v);
    }
    Value::Object(m)
}

pub(crate) fn rational(x: &Q) -> Value {
    Value::String(format_q(x))
}

pub(crate) fn vector(v: &[Q]) -> Value {
    Value::Array(v.iter().map(rational).collect())
}

pub(crate) fn matrix(m: &Matrix) -> Value {
    serde_json::to_value(MapSpec::from(m)).expect("matrices serialize")
}

pub(crate) fn form(b: &Bilinear) -> Value {
    serde_json::to_value(FormSpec::from(b)).expect("forms serialize")
}

pub(crate) fn cochain(w: &AltCochain) -> Value {
    serde_json::to_value(CochainSpec::from(w)).expect("cochains serialize")
}

pub(crate) fn algebra(l: &LieAlgebra) -> Value {
    serde_json::to_value(AlgebraSpec::from(l)).expect("algebras serialize")
}

pub(crate) fn violation(v: &Option<Vec<usize>>) -> Value {
    match v {
        None => Value::Null,
        Some(idx) => json!(idx),
    }
}
