//! Acceptance suite: one line per criterion, with its runtime limit.
//!
//! Runs without the libtest harness so the report prints in order; exits
//! nonzero if any criterion fails or exceeds its limit.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use weylpol_core::invariants::{
    beta_scan, characteristic_threshold_check, generator_span, good_filtration_dim_check, hilbert_compare,
    parse_rational, weyl_polarization_check, ActionKind, ActionSpec, GeneratorFamily,
};
use weylpol_core::partitions::{enumerate_partitions, slice_decomposition};
use weylpol_core::polarization::polarization_equality_check;
use weylpol_core::schur::{concat_report, schur_report};
use weylpol_core::tableaux::{cauchy_check, lr_coefficient, ssyt_enumerate};
use weylpol_core::{FieldSpec, Partition};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn all_partitions(d: usize) -> Vec<Vec<usize>> {
    enumerate_partitions(d, d).into_iter().map(|l| l.parts().to_vec()).collect()
}

/// Semistandard fillings counted cell by cell, row-major.
fn ssyt_oracle(shape: &[usize], m: usize) -> u64 {
    fn rec(shape: &[usize], m: usize, cells: &[(usize, usize)], at: usize, t: &mut Vec<Vec<usize>>) -> u64 {
        let Some(&(r, c)) = cells.get(at) else { return 1 };
        let lo_row = if c > 0 { t[r][c - 1] } else { 0 };
        let lo_col = if r > 0 { t[r - 1][c] + 1 } else { 0 };
        let mut total = 0;
        for v in lo_row.max(lo_col)..m {
            t[r][c] = v;
            total += rec(shape, m, cells, at + 1, t);
        }
        total
    }
    let cells: Vec<(usize, usize)> = shape.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
    let mut t: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    rec(shape, m, &cells, 0, &mut t)
}

/// `Π (m + c − r) / hook` over the cells, in exact integers.
fn hook_content_oracle(shape: &[usize], m: usize) -> u128 {
    let conj: Vec<usize> = (0..shape.first().copied().unwrap_or(0)).map(|c| shape.iter().filter(|&&l| l > c).count()).collect();
    let (mut num, mut den) = (1u128, 1u128);
    for (r, &len) in shape.iter().enumerate() {
        for c in 0..len {
            let content = m as i64 + c as i64 - r as i64;
            if content <= 0 {
                return 0;
            }
            num *= content as u128;
            den *= ((len - c - 1) + (conj[c] - r - 1) + 1) as u128;
        }
    }
    num / den
}

fn binomial_oracle(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn dominated(a: &[usize], b: &[usize]) -> bool {
    let (mut sa, mut sb) = (0, 0);
    (0..a.len().max(b.len())).all(|i| {
        sa += a.get(i).copied().unwrap_or(0);
        sb += b.get(i).copied().unwrap_or(0);
        sa <= sb
    })
}

fn criterion_1() -> Check {
    let worked = slice_decomposition(&p(&[8, 8, 7, 4]), 4, 3).map_err(|e| e.to_string())?;
    ensure(worked.pieces == [p(&[3, 3, 3, 3]), p(&[3, 3, 3, 1]), p(&[2, 2, 1])], || {
        format!("worked example gave {:?}", worked.pieces)
    })?;
    let mut cases = 0usize;
    for d in 0..=30 {
        for lambda in enumerate_partitions(d, 6) {
            for n in lambda.length().max(1)..=6 {
                for k in 2..=4 {
                    let s = slice_decomposition(&lambda, n, k).map_err(|e| e.to_string())?;
                    let mut sum = vec![0usize; n];
                    for piece in &s.pieces {
                        for (i, &x) in piece.parts().iter().enumerate() {
                            sum[i] += x;
                        }
                    }
                    sum.retain(|&x| x > 0);
                    ensure(sum == lambda.parts(), || format!("{lambda} n={n} k={k}: re-concatenation"))?;
                    let count = s.pieces.len();
                    for (i, piece) in s.pieces.iter().enumerate() {
                        let size = piece.size();
                        ensure(size <= k * n && (i + 1 == count || size > n * (k - 1)) && piece.length() <= n, || {
                            format!("{lambda} n={n} k={k}: piece {piece} outside the size window")
                        })?;
                    }
                    let bound = d.div_ceil(n * (k - 1));
                    ensure(count <= bound, || format!("{lambda} n={n} k={k}: {count} pieces > {bound}"))?;
                    cases += 1;
                }
            }
        }
    }
    Ok(format!("{cases} (λ, n, k) cases and the (8,8,7,4) example"))
}

fn criterion_2() -> Check {
    let fields = [FieldSpec::Rationals, FieldSpec::Prime(2), FieldSpec::Prime(3), FieldSpec::Prime(5)];
    let mut cases = Vec::new();
    for d in 0..=6 {
        for lambda in all_partitions(d) {
            for m in 1..=4 {
                for f in fields {
                    cases.push((lambda.clone(), m, f));
                }
            }
        }
    }
    let n = cases.len();
    cases.par_iter().try_for_each(|(lambda, m, f)| {
        let report = schur_report(&p(lambda), *m, *f).map_err(|e| e.to_string())?;
        let ssyt = ssyt_oracle(lambda, *m);
        let hook = hook_content_oracle(lambda, *m);
        ensure(
            report.space_dim as u64 == ssyt && u128::from(ssyt) == hook && ssyt_enumerate(&p(lambda), *m).len() as u64 == ssyt,
            || format!("{lambda:?} m={m} {f}: realized {} ssyt {ssyt} hook {hook}", report.space_dim),
        )
    })?;
    Ok(format!("{n} (λ, m, field) cases"))
}

fn criterion_3() -> Check {
    let mut cases = 0;
    for n in 1..=4 {
        for m in 1..=4 {
            for d in 0..=6 {
                let r = cauchy_check(n, m, d).map_err(|e| e.to_string())?;
                let lhs = if d == 0 { 1 } else { binomial_oracle((n * m + d - 1) as u128, d as u128) };
                let rhs: u128 = all_partitions(d)
                    .iter()
                    .map(|l| u128::from(ssyt_oracle(l, n)) * u128::from(ssyt_oracle(l, m)))
                    .sum();
                ensure(r.holds && lhs == rhs && r.lhs.to_string() == lhs.to_string(), || {
                    format!("n={n} m={m} d={d}: {lhs} vs {rhs}")
                })?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} (n, m, d) cases"))
}

fn criterion_4() -> Check {
    let two = polarization_equality_check(&p(&[2]), 1, 2, FieldSpec::Prime(2)).map_err(|e| e.to_string())?;
    ensure(!two.equal && two.dims == (2, 3), || format!("F_2 gave {:?}", two.dims))?;
    for f in [FieldSpec::Rationals, FieldSpec::Prime(3)] {
        let r = polarization_equality_check(&p(&[2]), 1, 2, f).map_err(|e| e.to_string())?;
        ensure(r.equal && r.dims == (3, 3), || format!("{f} gave {:?}", r.dims))?;
    }
    Ok("F_2: dim 2 of 3; Q and F_3: equal".into())
}

fn criterion_5() -> Check {
    let mut cases = Vec::new();
    for d in 1..=4 {
        let primes: Vec<u32> = [2u32, 3, 5, 7].into_iter().filter(|&q| q as usize > d).collect();
        for lambda in enumerate_partitions(d, 2) {
            for a in lambda.length()..=2 {
                for b in a..=4 {
                    cases.push((lambda.clone(), a, b, FieldSpec::Rationals));
                    for &q in &primes {
                        cases.push((lambda.clone(), a, b, FieldSpec::Prime(q)));
                    }
                }
            }
        }
    }
    let n = cases.len();
    cases.par_iter().try_for_each(|(lambda, a, b, f)| {
        let r = polarization_equality_check(lambda, *a, *b, *f).map_err(|e| e.to_string())?;
        ensure(r.equal, || format!("{lambda} a={a} b={b} {f}: dims {:?}", r.dims))
    })?;
    let mut failures = Vec::new();
    for d in 2..=4 {
        for q in [2u32, 3].into_iter().filter(|&q| q as usize <= d) {
            for lambda in enumerate_partitions(d, 2) {
                let r = polarization_equality_check(&lambda, lambda.length(), 4, FieldSpec::Prime(q))
                    .map_err(|e| e.to_string())?;
                if !r.equal {
                    failures.push(format!("{lambda}/fp:{q}"));
                }
            }
        }
    }
    ensure(!failures.is_empty(), || "no failure found at p ≤ d".into())?;
    Ok(format!("{n} equal cases; {} failures at p ≤ d, e.g. {}", failures.len(), failures[0]))
}

fn criterion_6() -> Check {
    let shapes: Vec<Vec<usize>> = (1..=5).flat_map(all_partitions).collect();
    let mut pairs = 0;
    for lambda in &shapes {
        for mu in &shapes {
            let top = &p(lambda) + &p(mu);
            let size = top.size();
            let terms: Vec<(Vec<usize>, u64)> = all_partitions(size)
                .into_iter()
                .map(|nu| Ok((nu.clone(), lr_coefficient(&p(&nu), &p(lambda), &p(mu))?)))
                .collect::<Result<Vec<_>, weylpol_core::Error>>()
                .map_err(|e| e.to_string())?
                .into_iter()
                .filter(|(_, c)| *c > 0)
                .collect();
            for (nu, c) in &terms {
                if nu[..] == *top.parts() {
                    ensure(*c == 1, || format!("c^top for {lambda:?} {mu:?} is {c}"))?;
                } else {
                    ensure(dominated(nu, top.parts()), || format!("{nu:?} not dominated by {top}"))?;
                }
            }
            ensure(terms.iter().any(|(nu, _)| nu[..] == *top.parts()), || format!("top missing for {lambda:?} {mu:?}"))?;
            for m in 1..=4 {
                let lhs = ssyt_oracle(lambda, m) * ssyt_oracle(mu, m);
                let rhs: u64 = terms.iter().map(|(nu, c)| c * ssyt_oracle(nu, m)).sum();
                ensure(lhs == rhs, || format!("{lambda:?} ⊗ {mu:?} m={m}: {lhs} vs {rhs}"))?;
            }
            pairs += 1;
        }
    }
    let mut concat = Vec::new();
    for lambda in &shapes {
        for mu in &shapes {
            for m in lambda.len().max(mu.len())..=4 {
                concat.push((lambda.clone(), mu.clone(), m));
            }
        }
    }
    let n = concat.len();
    concat.par_iter().try_for_each(|(lambda, mu, m)| {
        let r = concat_report(&p(lambda), &p(mu), *m, FieldSpec::Prime(7)).map_err(|e| e.to_string())?;
        ensure(r.surjective && r.kernel_matches_lr, || {
            format!("{lambda:?} {mu:?} m={m}: kernel {} vs {}", r.kernel_dim, r.lr_kernel_dim)
        })
    })?;
    Ok(format!("{pairs} (λ, μ) pairs; {n} concat projections over F_7"))
}

fn conj(n: usize, m: usize, f: FieldSpec) -> ActionSpec {
    ActionSpec::new(ActionKind::GlConjugation(n), m, f).unwrap()
}

fn criterion_7() -> Check {
    let mut cases = 0;
    for f in [FieldSpec::Rationals, FieldSpec::Prime(5)] {
        for m in 1..=2 {
            for d in 0..=3 {
                let r = good_filtration_dim_check(&conj(2, m, f), d).map_err(|e| e.to_string())?;
                ensure(r.holds, || format!("m={m} d={d} {f}: {} vs {}", r.lhs, r.rhs))?;
                if m == 2 && d == 2 {
                    let terms: Vec<_> = r.terms.iter().map(|t| (t.lambda.parts().to_vec(), t.invariant_dim, t.schur_dim)).collect();
                    ensure(r.lhs == 6 && terms.contains(&(vec![2], 2, 3)) && terms.contains(&(vec![1, 1], 0, 1)), || {
                        format!("worked case gave {terms:?}")
                    })?;
                }
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} cases, including 6 = 2·3 + 0·1"))
}

fn criterion_8() -> Check {
    let mut cases = vec![(ActionKind::GlConjugation(2), 1), (ActionKind::GlConjugation(2), 2)];
    cases.extend((1..=3).map(|m| (ActionKind::Sl2Vector, m)));
    let mut rows = Vec::new();
    for (kind, m) in cases {
        let r = hilbert_compare(kind, m, 5, 5).map_err(|e| e.to_string())?;
        ensure(r.holds, || format!("{kind} m={m}: {:?} vs {:?}", r.dims_rational, r.dims_prime))?;
        rows.push(format!("{kind}×{m} {:?}", r.dims_rational));
    }
    Ok(rows.join("; "))
}

fn criterion_9() -> Check {
    let sl2 = ActionSpec::new(ActionKind::Sl2Vector, 2, FieldSpec::Rationals).unwrap();
    let r = weyl_polarization_check(&sl2, 3, 4).map_err(|e| e.to_string())?;
    ensure(r.holds, || format!("sl2vec failed at {:?}", r.first_failure))?;
    let cyc = ActionSpec::new(ActionKind::CyclicUnipotent(2), 2, FieldSpec::Prime(2)).unwrap();
    let r = weyl_polarization_check(&cyc, 3, 6).map_err(|e| e.to_string())?;
    let at = r.first_failure.ok_or("cyclic:2 polarized at every degree")?;
    ensure(at <= 6, || format!("first failure at {at}"))?;
    Ok(format!("sl2vec holds for d ≤ 4; cyclic:2 over F_2 first fails at d = {at}"))
}

fn criterion_10() -> Check {
    let mut betas = Vec::new();
    for m in 1..=3 {
        let r = beta_scan(&conj(2, m, FieldSpec::Rationals), 5).map_err(|e| e.to_string())?;
        ensure(r.beta_lower <= 4, || format!("m={m}: beta_lower {}", r.beta_lower))?;
        betas.push(r.beta_lower);
    }
    let mut cases = 0;
    for f in [FieldSpec::Rationals, FieldSpec::Prime(5)] {
        for m in 1..=3 {
            for d in 0..=4 {
                let r = generator_span(&conj(2, m, f), GeneratorFamily::CharPolyTraces, d).map_err(|e| e.to_string())?;
                ensure(r.equal && r.contained, || format!("m={m} d={d} {f}: {} of {}", r.span_dim, r.invariant_dim))?;
                cases += 1;
            }
        }
    }
    Ok(format!("beta_lower {betas:?} for m = 1..3; trace span equal in {cases} cases"))
}

fn criterion_11() -> Check {
    let q = |s: &str| parse_rational(s).unwrap();
    let check = |n, s: &str, prime| characteristic_threshold_check(n, &q(s), prime).map_err(|e| e.to_string());
    ensure(check(4, "8", 89)?.holds, || "p = 89 should pass".into())?;
    ensure(!check(4, "8", 83)?.holds, || "p = 83 should fail".into())?;
    let edge = check(4, "17/2", 89)?;
    ensure(!edge.holds && edge.bound == "89", || format!("boundary gave {edge:?}"))?;
    ensure(characteristic_threshold_check(4, &q("1/3"), 89).is_err(), || "Q < 1/2 accepted".into())?;
    Ok("89 > 84 true, 83 false, 89 = 89 false".into())
}

fn criterion_12() -> Check {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/manifests");
    let mut paths: Vec<_> = std::fs::read_dir(dir)
        .map_err(|e| e.to_string())?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    let run = |path: &std::path::Path, threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_weylpol"))
            .arg("manifest")
            .arg(path)
            .env("WEYLPOL_THREADS", threads)
            .output()
            .map_err(|e| e.to_string())
    };
    for path in &paths {
        let first = run(path, "1")?;
        let second = run(path, "4")?;
        let name = path.file_name().unwrap().to_string_lossy().to_string();
        ensure(first.status.success(), || format!("{name} failed: {}", String::from_utf8_lossy(&first.stdout)))?;
        ensure(first.stdout == second.stdout, || format!("{name} output differs between runs"))?;
    }
    Ok(format!("{} manifests, byte-identical across runs and thread counts", paths.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check, u64); 12] = [
        ("slicing lemma suite", criterion_1, 10),
        ("Schur dimension coherence", criterion_2, 60),
        ("Cauchy identity", criterion_3, 5),
        ("characteristic-two counterexample", criterion_4, 1),
        ("polarization equality grid", criterion_5, 120),
        ("Littlewood-Richardson structure", criterion_6, 60),
        ("good-filtration dimension identity", criterion_7, 120),
        ("cross-characteristic Hilbert agreement", criterion_8, 120),
        ("Weyl polarization check", criterion_9, 120),
        ("degree-bound consistency", criterion_10, 180),
        ("threshold arithmetic", criterion_11, 1),
        ("manifest determinism", criterion_12, 300),
    ];
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(*limit);
        let (status, detail) = match (&outcome, in_time) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("over the time limit: {d}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "[{status}] {:>2}. {name} ({:.2}s, limit {limit}s): {detail}",
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
