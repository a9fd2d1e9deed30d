//! Experiment manifests: a JSON file `{"jobs": [...]}` whose jobs are ordinary
//! commands. A job is `{"name", "command", "params", "expected"}`; `params`
//! become `--key value` flags and `expected`, when present, must be a subset
//! of the job's `result`.

use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use clap::Parser;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::args::{Cli, Command, Global};
use crate::commands::execute;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    #[serde(default)]
    pub jobs: Vec<Job>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Job {
    pub name: String,
    /// Subcommand and verb, e.g. `"polarize check"`.
    pub command: String,
    #[serde(default)]
    pub params: Map<String, Value>,
    #[serde(default)]
    pub expected: Option<Value>,
}

#[derive(Debug, Clone, Serialize)]
pub struct JobReport {
    pub name: String,
    pub command: String,
    pub params: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// JSON pointers where `result` disagrees with `expected`.
    pub mismatches: Vec<String>,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ManifestReport {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub jobs: Vec<JobReport>,
}

impl ManifestReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

fn flag_value(v: &Value) -> Result<String> {
    Ok(match v {
        Value::String(s) => s.clone(),
        Value::Number(n) => n.to_string(),
        Value::Array(items) => items.iter().map(flag_value).collect::<Result<Vec<_>>>()?.join(","),
        other => bail!("unsupported parameter value {other}"),
    })
}

/// Command-line arguments for a job, without the program name.
pub fn job_argv(job: &Job) -> Result<Vec<String>> {
    let mut argv: Vec<String> = job.command.split_whitespace().map(String::from).collect();
    for (key, value) in &job.params {
        let flag = format!("--{}", key.replace('_', "-"));
        match value {
            Value::Bool(true) => argv.push(flag),
            Value::Bool(false) | Value::Null => {}
            v => {
                argv.push(flag);
                argv.push(flag_value(v)?);
            }
        }
    }
    Ok(argv)
}

fn parse_job(job: &Job) -> Result<(Command, Global)> {
    let argv = job_argv(job)?;
    let cli = Cli::try_parse_from(std::iter::once("weylpol".to_string()).chain(argv))
        .map_err(|e| anyhow!("job {:?}: {}", job.name, e.render().to_string().trim()))?;
    if matches!(cli.command, Command::Manifest(_)) {
        bail!("job {:?}: manifests cannot be nested", job.name);
    }
    Ok((cli.command, cli.global))
}

/// Collects the JSON pointers at which `actual` fails to contain `expected`.
pub fn subset_mismatches(expected: &Value, actual: &Value, path: &str, out: &mut Vec<String>) {
    match (expected, actual) {
        (Value::Object(e), Value::Object(a)) => {
            for (k, ev) in e {
                let p = format!("{path}/{k}");
                match a.get(k) {
                    Some(av) => subset_mismatches(ev, av, &p, out),
                    None => out.push(p),
                }
            }
        }
        (Value::Array(e), Value::Array(a)) if e.len() == a.len() => {
            for (i, (ev, av)) in e.iter().zip(a).enumerate() {
                subset_mismatches(ev, av, &format!("{path}/{i}"), out);
            }
        }
        (Value::Number(e), Value::Number(a)) if e.as_f64() == a.as_f64() => {}
        (e, a) if e == a => {}
        _ => out.push(if path.is_empty() { "/".into() } else { path.into() }),
    }
}

pub fn parse_manifest(text: &str) -> Result<Manifest> {
    Ok(serde_json::from_str(text)?)
}

/// Validates every job, then runs them in parallel. Reports keep manifest order.
/// Errors are manifest errors: unreadable file, bad JSON, or a job that does
/// not parse as a command.
pub fn run_manifest(manifest: &Manifest) -> Result<ManifestReport> {
    let parsed = manifest.jobs.iter().map(parse_job).collect::<Result<Vec<_>>>()?;
    let jobs: Vec<JobReport> = manifest
        .jobs
        .par_iter()
        .zip(parsed.par_iter())
        .map(|(job, (command, global))| {
            let params = Value::Object(job.params.clone());
            match execute(command, global) {
                Ok(outcome) => {
                    let mut mismatches = Vec::new();
                    if let Some(expected) = &job.expected {
                        subset_mismatches(expected, &outcome.result, "", &mut mismatches);
                    }
                    JobReport {
                        name: job.name.clone(),
                        command: job.command.clone(),
                        params,
                        passed: mismatches.is_empty(),
                        result: Some(outcome.result),
                        error: None,
                        mismatches,
                    }
                }
                Err(e) => JobReport {
                    name: job.name.clone(),
                    command: job.command.clone(),
                    params,
                    result: None,
                    error: Some(format!("{e:#}")),
                    mismatches: Vec::new(),
                    passed: false,
                },
            }
        })
        .collect();
    let passed = jobs.iter().filter(|j| j.passed).count();
    Ok(ManifestReport { total: jobs.len(), passed, failed: jobs.len() - passed, jobs })
}

pub fn load_manifest(path: &Path) -> Result<Manifest> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_manifest(&text).with_context(|| format!("parsing {}", path.display()))
}
