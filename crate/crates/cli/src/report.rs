use std::io::{self, Write};
use std::process::ExitCode;

use serde_json::{json, Value};

use clifford_twist::Error;

/// Output of one subcommand: text lines plus the JSON fields.
pub struct Report {
    pub command: &'static str,
    pub inputs: Value,
    pub results: Value,
    pub witnesses: Vec<Value>,
    pub passed: bool,
    text: Vec<String>,
}

impl Report {
    pub fn new(command: &'static str, inputs: Value) -> Self {
        Report {
            command,
            inputs,
            results: Value::Null,
            witnesses: Vec::new(),
            passed: true,
            text: Vec::new(),
        }
    }

    pub fn line(&mut self, s: String) {
        self.text.push(s);
    }

    pub fn emit(self, json: bool, timing_ms: Option<f64>) -> ExitCode {
        // a closed pipe is not an error
        let mut out = io::stdout().lock();
        if json {
            let doc = json!({
                "command": self.command,
                "inputs": self.inputs,
                "results": self.results,
                "witnesses": self.witnesses,
                "timing_ms": timing_ms,
            });
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        } else {
            for l in &self.text {
                let _ = writeln!(out, "{l}");
            }
            if let Some(ms) = timing_ms {
                let _ = writeln!(out, "time: {ms:.1} ms");
            }
        }
        if self.passed {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        }
    }
}

pub enum CliError {
    Usage(String),
    Input(Error),
}

impl CliError {
    pub fn emit(self, json: bool) -> ExitCode {
        let msg = match self {
            CliError::Usage(m) => m,
            CliError::Input(e) => e.to_string(),
        };
        if json {
            println!("{}", serde_json::to_string_pretty(&json!({ "error": msg })).expect("serializable"));
        } else {
            eprintln!("error: {msg}");
        }
        ExitCode::from(2)
    }
}
