use std::fmt::Write as _;
use std::process::ExitCode;

use clap::ValueEnum;
use flagmult::Error;
use serde_json::{json, Value};

use crate::Output;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug)]
pub enum CliError {
    Usage { flag: String, message: String },
    Violation(Value),
    Io(String),
}

impl CliError {
    pub fn usage(flag: &str, message: impl Into<String>) -> CliError {
        CliError::Usage {
            flag: flag.to_string(),
            message: message.into(),
        }
    }

    pub fn report(&self) -> ExitCode {
        match self {
            CliError::Usage { flag, message } => {
                eprintln!("error: {flag}: {message}");
                ExitCode::from(2)
            }
            CliError::Violation(w) => {
                eprintln!("{}", serde_json::to_string(w).expect("json"));
                ExitCode::from(1)
            }
            CliError::Io(m) => {
                eprintln!("error: {m}");
                ExitCode::from(2)
            }
        }
    }
}

/// Maps a library error to a usage error on `flag`, or to a violation with
/// its witness.
pub fn lib_error(e: Error, flag: &str) -> CliError {
    match e {
        Error::PropertyViolation(v) => CliError::Violation(json!(*v)),
        Error::KeyInconsistency { key, first, second } => CliError::Violation(json!({
            "check": "atlas", "key": key, "lhs": first, "rhs": second
        })),
        Error::NotDivisible { numerator, divisor } => CliError::Violation(json!({
            "check": "divisibility", "lhs": numerator, "rhs": divisor
        })),
        Error::CuspidalUnavailable { position, reason } => CliError::Violation(json!({
            "check": "cuspidal input", "index": position, "lhs": reason, "rhs": ""
        })),
        Error::Checksum { expected, found } => CliError::Violation(json!({
            "check": "table checksum", "lhs": found, "rhs": expected
        })),
        Error::UnsupportedType { .. } => CliError::usage("--rank", e.to_string()),
        Error::LetterOutOfRange { .. }
        | Error::NotReduced(_)
        | Error::NotFullyCommutative(_)
        | Error::NotDominantMinuscule(_)
        | Error::NotLongestElement(_) => CliError::usage("--word", e.to_string()),
        Error::BadBraidPosition { .. } | Error::BadCommutePosition { .. } => {
            CliError::usage("--position", e.to_string())
        }
        Error::ConstructionFailed { .. } => CliError::usage("--order", e.to_string()),
        Error::Range(_) | Error::Parse(_) => CliError::usage(flag, e.to_string()),
    }
}

pub struct Report {
    pub value: Value,
    pub witness: Option<Value>,
}

impl Report {
    pub fn ok(value: Value) -> Report {
        Report {
            value,
            witness: None,
        }
    }

    pub fn with_witness(mut self, witness: Option<Value>) -> Report {
        self.witness = witness;
        self
    }

    /// Writes the result, then surfaces a witness as a violation.
    pub fn emit(self, out: &Output) -> Result<(), CliError> {
        let body = match out.format {
            Format::Json => serde_json::to_string(&self.value).expect("json") + "\n",
            Format::Text => text(&self.value),
        };
        match &out.emit {
            Some(path) => std::fs::write(path, body)
                .map_err(|e| CliError::Io(format!("--emit {}: {e}", path.display())))?,
            None => print!("{body}"),
        }
        match self.witness {
            Some(w) => Err(CliError::Violation(w)),
            None => Ok(()),
        }
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| matches!(x, Value::Number(_))) => Some(format!(
            "[{}]",
            a.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )),
        _ => None,
    }
}

fn write_text(out: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match scalar(x) {
                    Some(s) => writeln!(out, "{pad}{k}: {s}").unwrap(),
                    None => {
                        writeln!(out, "{pad}{k}:").unwrap();
                        write_text(out, x, indent + 1);
                    }
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                match scalar(x) {
                    Some(s) => writeln!(out, "{pad}{s}").unwrap(),
                    None => {
                        writeln!(out, "{pad}-").unwrap();
                        write_text(out, x, indent + 1);
                    }
                }
            }
        }
        other => writeln!(out, "{pad}{}", scalar(other).unwrap_or_default()).unwrap(),
    }
}

/// Indented `key: value` rendering of a JSON result.
pub fn text(v: &Value) -> String {
    let mut out = String::new();
    write_text(&mut out, v, 0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_becomes_violation() {
        let out = Output {
            format: Format::Json,
            emit: Some(std::env::temp_dir().join("flagmult-render-test.json")),
        };
        let w = json!({"check": "hook formula", "lhs": "1", "rhs": "2"});
        let r = Report::ok(json!({"equal": false})).with_witness(Some(w.clone()));
        match r.emit(&out) {
            Err(CliError::Violation(v)) => assert_eq!(v, w),
            other => panic!("{other:?}"),
        }
        assert_eq!(CliError::Violation(w).report(), ExitCode::from(1));
        assert_eq!(CliError::usage("--word", "bad").report(), ExitCode::from(2));
        assert!(Report::ok(json!({})).emit(&out).is_ok());
    }

    #[test]
    fn text_layout() {
        let v = json!({"type": "A2", "coeffs": [1, 0], "words": [{"root": "a1"}]});
        assert_eq!(
            text(&v),
            "type: A2\ncoeffs: [1,0]\nwords:\n  -\n    root: a1\n"
        );
    }
}
