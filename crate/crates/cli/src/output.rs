use std::io::Write;
use std::process::ExitCode;

use serde_json::{json, Value};

/// Result of a successful command run: a text rendering and a JSON value
/// carrying the same information.
pub struct Outcome {
    pub text: String,
    pub json: Value,
    /// False for predicate commands whose property does not hold (exit 1).
    pub holds: bool,
}

impl Outcome {
    pub fn new(text: String, json: Value) -> Self {
        Outcome {
            text,
            json,
            holds: true,
        }
    }

    pub fn predicate(text: String, json: Value, holds: bool) -> Self {
        Outcome { text, json, holds }
    }

    pub fn emit(self, as_json: bool) -> ExitCode {
        let mut out = std::io::stdout().lock();
        let body = if as_json {
            let mut s = serde_json::to_string_pretty(&self.json).expect("serializable");
            s.push('\n');
            s
        } else {
            self.text
        };
        // A closed pipe is not worth a panic.
        let _ = out.write_all(body.as_bytes());
        ExitCode::from(if self.holds { 0 } else { 1 })
    }
}

/// A one-line error with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub kind: &'static str,
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Failure {
            kind: "input",
            code: 2,
            message: message.into(),
        }
    }

    pub fn emit(self, as_json: bool) -> ExitCode {
        let message = self.message.replace('\n', " ");
        if as_json {
            let v = json!({ "error": { "kind": self.kind, "message": message } });
            println!("{v}");
        } else {
            eprintln!("error: {}: {}", self.kind, message);
        }
        ExitCode::from(self.code)
    }
}

impl From<rloop::Error> for Failure {
    fn from(e: rloop::Error) -> Self {
        match e {
            rloop::Error::CapExceeded { .. } => Failure {
                kind: "cap",
                code: 3,
                message: e.to_string(),
            },
            rloop::Error::Internal(msg) => Failure {
                kind: "internal",
                code: 2,
                message: msg,
            },
            other => Failure::input(other.to_string()),
        }
    }
}

pub type CmdResult = Result<Outcome, Failure>;
