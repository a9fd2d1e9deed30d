use anyhow::{bail, Result};
use serde::Serialize;
use serde_json::{json, Map, Value};
use weylpol_core::invariants::{
    beta_scan, characteristic_threshold_check, generator_span, good_filtration_dim_check, hilbert_compare,
    invariant_report, parse_rational, weyl_polarization_check, ActionSpec,
};
use weylpol_core::partitions::{enumerate_partitions, schur_dimension, slice_decomposition};
use weylpol_core::polarization::{gl_closure, polarization_equality_check, random_group_span, slicing_polarization_check};
use weylpol_core::schur::{concat_report, embed, embed_report, realize_schur, schur_report};
use weylpol_core::tableaux::{cauchy_check, lr_coefficient, lr_expand_product, ssyt_enumerate};
use weylpol_core::{with_field, FieldSpec};

use crate::args::*;

/// A finished command: the `result` block plus the identity it checked, if any.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub command: String,
    pub params: Value,
    pub result: Value,
    pub verdict: Option<bool>,
}

fn params<T: Serialize>(args: &T, global: &Global, uses_field: bool) -> Result<Value> {
    let mut map = match serde_json::to_value(args)? {
        Value::Object(m) => m,
        _ => Map::new(),
    };
    if uses_field {
        map.insert("field".into(), json!(global.field.to_string()));
    }
    Ok(Value::Object(map))
}

fn action(a: &ActionArgs, field: FieldSpec) -> Result<ActionSpec> {
    Ok(ActionSpec::new(a.action, a.copies, field)?)
}

struct Run {
    command: &'static str,
    params: Value,
    result: Value,
    verdict: Option<bool>,
}

impl Run {
    fn new<R: Serialize>(command: &'static str, params: Value, result: &R, verdict: Option<bool>) -> Result<Self> {
        Ok(Run { command, params, result: serde_json::to_value(result)?, verdict })
    }
}

/// Runs a parsed command. Errors are usage errors: bad parameters or violated
/// hypotheses.
pub fn execute(command: &Command, g: &Global) -> Result<Outcome> {
    let run = match command {
        Command::Partitions(cmd) => partitions(cmd, g)?,
        Command::Tableaux(cmd) => tableaux(cmd, g)?,
        Command::Schur(cmd) => schur(cmd, g)?,
        Command::Polarize(cmd) => polarize(cmd, g)?,
        Command::Invariants(cmd) => invariants(cmd, g)?,
        Command::Manifest(_) => bail!("manifests cannot be nested"),
    };
    Ok(Outcome { command: run.command.to_string(), params: run.params, result: run.result, verdict: run.verdict })
}

fn partitions(cmd: &PartitionsCmd, g: &Global) -> Result<Run> {
    match cmd {
        PartitionsCmd::Conjugate(a) => Run::new(
            "partitions conjugate",
            params(a, g, false)?,
            &json!({ "lambda": a.lambda, "conjugate": a.lambda.conjugate() }),
            None,
        ),
        PartitionsCmd::Concat(a) => Run::new(
            "partitions concat",
            params(a, g, false)?,
            &json!({ "lambda": a.lambda, "mu": a.mu, "concat": &a.lambda + &a.mu }),
            None,
        ),
        PartitionsCmd::Slice(a) => {
            let s = slice_decomposition(&a.lambda, a.n, a.k)?;
            let sizes: Vec<usize> = s.pieces.iter().map(|p| p.size()).collect();
            let check = s.check(&a.lambda);
            let mut result = serde_json::to_value(&s)?;
            result["sizes"] = json!(sizes);
            result["check"] = serde_json::to_value(&check)?;
            Run::new("partitions slice", params(a, g, false)?, &result, Some(check.holds))
        }
        PartitionsCmd::Enumerate(a) => {
            let list = enumerate_partitions(a.d, a.max_len.unwrap_or(a.d));
            Run::new(
                "partitions enumerate",
                params(a, g, false)?,
                &json!({ "d": a.d, "count": list.len(), "partitions": list }),
                None,
            )
        }
        PartitionsCmd::Dim(a) => Run::new(
            "partitions dim",
            params(a, g, false)?,
            &json!({ "lambda": a.lambda, "m": a.m, "dim": schur_dimension(&a.lambda, a.m).to_string() }),
            None,
        ),
    }
}

fn tableaux(cmd: &TableauxCmd, g: &Global) -> Result<Run> {
    match cmd {
        TableauxCmd::Count(a) => {
            let count = ssyt_enumerate(&a.lambda, a.m).len();
            let formula = schur_dimension(&a.lambda, a.m);
            let matches = formula == count.into();
            Run::new(
                "tableaux count",
                params(a, g, false)?,
                &json!({ "lambda": a.lambda, "m": a.m, "ssyt_count": count, "hook_content": formula.to_string(), "matches": matches }),
                Some(matches),
            )
        }
        TableauxCmd::Lr(a) => {
            let result = match &a.nu {
                Some(nu) => json!({
                    "lambda": a.lambda, "mu": a.mu, "nu": nu,
                    "coefficient": lr_coefficient(nu, &a.lambda, &a.mu)?,
                }),
                None => {
                    let max_len = a.max_len.unwrap_or(a.lambda.length() + a.mu.length());
                    json!({ "lambda": a.lambda, "mu": a.mu, "terms": lr_expand_product(&a.lambda, &a.mu, max_len) })
                }
            };
            Run::new("tableaux lr", params(a, g, false)?, &result, None)
        }
        TableauxCmd::Cauchy(a) => {
            let r = cauchy_check(a.n, a.m, a.d)?;
            Run::new("tableaux cauchy", params(a, g, false)?, &r, Some(r.holds))
        }
    }
}

fn schur(cmd: &SchurCmd, g: &Global) -> Result<Run> {
    let field = g.field;
    match cmd {
        SchurCmd::Dim(a) => Run::new(
            "schur dim",
            params(a, g, false)?,
            &json!({ "lambda": a.lambda, "m": a.m, "dim": schur_dimension(&a.lambda, a.m).to_string() }),
            None,
        ),
        SchurCmd::Realize(a) => {
            let r = schur_report(&a.lambda, a.m, field)?;
            Run::new("schur realize", params(a, g, true)?, &r, Some(r.matches))
        }
        SchurCmd::EmbedCheck(a) => {
            let r = embed_report(&a.lambda, a.a, a.b, field)?;
            Run::new("schur embed-check", params(a, g, true)?, &r, Some(r.contained))
        }
        SchurCmd::ConcatCheck(a) => {
            let r = concat_report(&a.lambda, &a.mu, a.m, field)?;
            let ok = r.surjective && r.kernel_matches_lr;
            Run::new("schur concat-check", params(a, g, true)?, &r, Some(ok))
        }
    }
}

fn closure(a: &ClosureArgs, field: FieldSpec, seed: u64) -> Result<Value> {
    if a.a > a.b {
        bail!("a = {} exceeds b = {}", a.a, a.b);
    }
    with_field!(field, f => {
        let src = realize_schur(&a.lambda, a.a, &f)?;
        let emb = embed(&src, a.b)?;
        let c = gl_closure(&emb.image, &emb.ambient)?;
        let target = realize_schur(&a.lambda, a.b, &f)?;
        let probed = random_group_span(&c, &emb.ambient, a.probes, seed)?;
        Ok(json!({
            "lambda": a.lambda,
            "a": a.a,
            "b": a.b,
            "field": field.to_string(),
            "source_dim": src.space.dim(),
            "closure_dim": c.dim(),
            "target_dim": target.space.dim(),
            "ambient_dim": emb.ambient.dim(),
            "probes": a.probes,
            "probe_stable": probed == c,
            "equal": c == target.space,
        }))
    })
}

fn polarize(cmd: &PolarizeCmd, g: &Global) -> Result<Run> {
    match cmd {
        PolarizeCmd::Closure(a) => {
            let mut p = params(a, g, true)?;
            p["seed"] = json!(g.seed);
            let r = closure(a, g.field, g.seed)?;
            let stable = r["probe_stable"].as_bool();
            Run::new("polarize closure", p, &r, stable)
        }
        PolarizeCmd::Check(a) => {
            let r = polarization_equality_check(&a.lambda, a.a, a.b, g.field)?;
            Run::new("polarize check", params(a, g, true)?, &r, Some(r.equal))
        }
        PolarizeCmd::SlicingCheck(a) => {
            let r = slicing_polarization_check(&a.lambda, a.n, a.k, a.m, g.field)?;
            Run::new("polarize slicing-check", params(a, g, true)?, &r, Some(r.equal))
        }
    }
}

fn invariants(cmd: &InvariantsCmd, g: &Global) -> Result<Run> {
    match cmd {
        InvariantsCmd::Space(a) => {
            let r = invariant_report(&action(&a.action, g.field)?, a.d, a.basis)?;
            Run::new("invariants space", params(a, g, true)?, &r, None)
        }
        InvariantsCmd::Beta(a) => {
            let r = beta_scan(&action(&a.action, g.field)?, a.dmax)?;
            Run::new("invariants beta", params(a, g, true)?, &r, None)
        }
        InvariantsCmd::WeylCheck(a) => {
            let r = weyl_polarization_check(&action(&a.action, g.field)?, a.b, a.dmax)?;
            Run::new("invariants weyl-check", params(a, g, true)?, &r, Some(r.holds))
        }
        InvariantsCmd::Gens(a) => {
            let r = generator_span(&action(&a.action, g.field)?, a.family, a.d)?;
            Run::new("invariants gens", params(a, g, true)?, &r, Some(r.equal))
        }
        InvariantsCmd::Gfdim(a) => {
            let r = good_filtration_dim_check(&action(&a.action, g.field)?, a.d)?;
            Run::new("invariants gfdim", params(a, g, true)?, &r, Some(r.holds))
        }
        InvariantsCmd::Hilbert(a) => {
            let r = hilbert_compare(a.action.action, a.action.copies, a.dmax, a.p)?;
            Run::new("invariants hilbert", params(a, g, false)?, &r, Some(r.holds))
        }
        InvariantsCmd::Threshold(a) => {
            let q = parse_rational(&a.q)?;
            let r = characteristic_threshold_check(a.n_dim, &q, a.p)?;
            Run::new("invariants threshold", params(a, g, false)?, &r, None)
        }
    }
}
