//! Command-line driver for `weylpol-core`.
//!
//! Every invocation prints one JSON object
//! `{"command", "params", "result", "elapsed_ms"}` and exits with 0 when the
//! command succeeded (and its identity holds), 1 when a checked identity
//! fails, 2 on usage errors. Manifest summaries omit timings so that reruns
//! are byte-identical.

pub mod args;
pub mod commands;
pub mod manifest;

use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::{Cli, Command};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Execution {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Serialize)]
struct Envelope<'a> {
    command: &'a str,
    params: &'a Value,
    result: &'a Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u64>,
}

fn usage(msg: String) -> Execution {
    Execution { code: EXIT_USAGE, stdout: String::new(), stderr: msg }
}

fn flatten(v: &Value, path: &str, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                flatten(x, &if path.is_empty() { k.clone() } else { format!("{path}.{k}") }, out);
            }
        }
        Value::Array(items) if items.iter().any(|x| x.is_object()) => {
            for (i, x) in items.iter().enumerate() {
                flatten(x, &format!("{path}[{i}]"), out);
            }
        }
        other => out.push((path.to_string(), other.to_string())),
    }
}

fn render(envelope: &Envelope<'_>, pretty: bool) -> String {
    if !pretty {
        return serde_json::to_string(envelope).expect("JSON values serialize") + "\n";
    }
    let mut rows = vec![("command".to_string(), envelope.command.to_string())];
    flatten(envelope.params, "params", &mut rows);
    flatten(envelope.result, "result", &mut rows);
    if let Some(ms) = envelope.elapsed_ms {
        rows.push(("elapsed_ms".into(), ms.to_string()));
    }
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter().map(|(k, v)| format!("{k:width$}  {v}\n")).collect()
}

fn configure_threads(threads: Option<usize>) {
    if let Some(n) = threads.filter(|&n| n > 0) {
        // a pool that already exists keeps its size
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

/// Parses `argv` (program name first) and runs it.
pub fn run<I, T>(argv: I) -> Execution
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            return Execution { code: EXIT_OK, stdout: e.render().to_string(), stderr: String::new() };
        }
        Err(e) => return usage(e.render().to_string()),
    };
    configure_threads(cli.global.threads);

    if let Command::Manifest(m) = &cli.command {
        let report = match manifest::load_manifest(&m.path).and_then(|x| manifest::run_manifest(&x)) {
            Ok(r) => r,
            Err(e) => return usage(format!("error: {e:#}\n")),
        };
        let params = json!({ "path": m.path.display().to_string() });
        let result = serde_json::to_value(&report).expect("reports serialize");
        let env = Envelope { command: "manifest", params: &params, result: &result, elapsed_ms: None };
        let code = if report.all_passed() { EXIT_OK } else { EXIT_FAILED };
        return Execution { code, stdout: render(&env, cli.global.pretty), stderr: String::new() };
    }

    let start = Instant::now();
    match commands::execute(&cli.command, &cli.global) {
        Ok(out) => {
            let elapsed = start.elapsed().as_millis() as u64;
            let env = Envelope { command: &out.command, params: &out.params, result: &out.result, elapsed_ms: Some(elapsed) };
            let code = if out.verdict == Some(false) { EXIT_FAILED } else { EXIT_OK };
            Execution { code, stdout: render(&env, cli.global.pretty), stderr: String::new() }
        }
        Err(e) => usage(format!("error: {e:#}\n")),
    }
}
