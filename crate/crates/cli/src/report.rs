use std::time::Duration;

use serde_json::{json, Map, Value};

use crate::GlobalArgs;

/// What a subcommand produced, before framing.
pub struct Outcome {
    pub inputs: Value,
    pub results: Value,
    /// Text output, one line each.
    pub lines: Vec<String>,
    /// `None` for commands that compute rather than check.
    pub pass: Option<bool>,
    pub certified: bool,
}

pub struct RunReport {
    command: String,
    outcome: Outcome,
    elapsed: Duration,
    meta: bool,
}

impl RunReport {
    pub fn new(command: String, outcome: Outcome, g: &GlobalArgs, elapsed: Duration) -> Self {
        RunReport {
            command,
            outcome,
            elapsed,
            meta: !g.no_meta,
        }
    }

    pub fn pass(&self) -> bool {
        self.outcome.pass.unwrap_or(true)
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("schema".into(), json!(1));
        m.insert("command".into(), json!(self.command));
        m.insert("inputs".into(), self.outcome.inputs.clone());
        m.insert("results".into(), self.outcome.results.clone());
        m.insert("certified".into(), json!(self.outcome.certified));
        if let Some(p) = self.outcome.pass {
            m.insert("pass".into(), json!(p));
        }
        if self.meta {
            m.insert("elapsed_seconds".into(), json!(format!("{:.3}", self.elapsed.as_secs_f64())));
            m.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
        }
        Value::Object(m)
    }

    pub fn emit(&self, g: &GlobalArgs) {
        if g.json {
            println!("{}", serde_json::to_string_pretty(&self.to_json()).expect("json values serialize"));
            return;
        }
        for line in &self.outcome.lines {
            println!("{line}");
        }
        if let Some(p) = self.outcome.pass {
            println!("{}", if p { "ALL PASS" } else { "SOME CHECKS FAILED" });
        }
    }
}
