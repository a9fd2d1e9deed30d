use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::{invariant_space, invariants_in_module, ActionKind, ActionSpec, InvariantTower};
use crate::field::{is_prime, Field, FieldSpec};
use crate::partitions::{enumerate_partitions, schur_dimension, Partition};
use crate::polarization::gl_closure;
use crate::poly::{Axis, MonomialModule};
use crate::schur::realize_schur;
use crate::{with_field, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BetaReport {
    pub action: ActionSpec,
    pub d_max: usize,
    /// Indexed by degree, starting at 0.
    pub dims_invariant: Vec<usize>,
    pub dims_indecomposable: Vec<usize>,
    /// Largest degree `≤ d_max` with indecomposables: a lower bound for β.
    pub beta_lower: usize,
    /// No indecomposables in the last `window` degrees. Heuristic only.
    pub stabilized: bool,
    pub window: usize,
}

fn beta_scan_in<F: Field>(action: &ActionSpec, d_max: usize, field: &F) -> Result<BetaReport> {
    let tower = InvariantTower::new(action, d_max, field)?;
    let dims_invariant = tower.dims();
    let mut dims_indecomposable = alloc::vec![0; d_max + 1];
    if d_max >= 1 {
        dims_indecomposable[1] = dims_invariant[1];
    }
    for d in 2..=d_max {
        dims_indecomposable[d] = dims_invariant[d] - tower.decomposables(d)?.dim();
    }
    let beta_lower = (1..=d_max).rev().find(|&d| dims_indecomposable[d] > 0).unwrap_or(0);
    let window = d_max.div_ceil(3);
    let stabilized = dims_indecomposable[d_max + 1 - window..].iter().all(|&x| x == 0);
    Ok(BetaReport {
        action: *action,
        d_max,
        dims_invariant,
        dims_indecomposable,
        beta_lower,
        stabilized,
        window,
    })
}

/// Per-degree invariant and indecomposable dimensions up to `d_max`.
pub fn beta_scan(action: &ActionSpec, d_max: usize) -> Result<BetaReport> {
    if d_max == 0 {
        return Err(Error::InvalidInput(String::from("d_max must be at least 1")));
    }
    with_field!(action.field, f => beta_scan_in(action, d_max, &f))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeylDegree {
    pub d: usize,
    pub dim_a: usize,
    /// `dim ⟨K[V^a]^G_d⟩_{GL_b}`.
    pub closure_dim: usize,
    pub dim_b: usize,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeylReport {
    pub action: ActionSpec,
    pub a: usize,
    pub b: usize,
    pub d_max: usize,
    pub degrees: Vec<WeylDegree>,
    pub holds: bool,
    pub first_failure: Option<usize>,
}

fn weyl_in<F: Field>(action: &ActionSpec, b: usize, d_max: usize, field: &F) -> Result<WeylReport> {
    let a = action.copies;
    let wide = action.with_copies(b);
    let mut degrees = Vec::with_capacity(d_max + 1);
    for d in 0..=d_max {
        let small = invariant_space(action, d, field)?;
        let big = invariant_space(&wide, d, field)?;
        let embedded = small
            .space
            .basis()
            .iter()
            .map(|v| small.module.embed_vector(field, &big.module, v))
            .collect::<Result<Vec<_>>>()?;
        let s = crate::linalg::Subspace::span(field.clone(), big.module.dim(), embedded)?;
        let closure = gl_closure(&s, &big.module)?;
        degrees.push(WeylDegree {
            d,
            dim_a: small.space.dim(),
            closure_dim: closure.dim(),
            dim_b: big.space.dim(),
            equal: closure == big.space,
        });
    }
    let first_failure = degrees.iter().find(|x| !x.equal).map(|x| x.d);
    Ok(WeylReport { action: *action, a, b, d_max, holds: first_failure.is_none(), first_failure, degrees })
}

/// Degree by degree, is `⟨K[V^a]^G_d⟩_{GL_b} = K[V^b]^G_d`, with `a` the
/// number of copies in `action`?
pub fn weyl_polarization_check(action: &ActionSpec, b: usize, d_max: usize) -> Result<WeylReport> {
    if action.copies > b {
        return Err(Error::InvalidInput(format!("a = {} exceeds b = {b}", action.copies)));
    }
    with_field!(action.field, f => weyl_in(action, b, d_max, &f))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiltrationTerm {
    pub lambda: Partition,
    /// `dim S_λ(V*)^G`.
    pub invariant_dim: usize,
    /// `dim S_λ(K^m)`.
    pub schur_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiltrationReport {
    pub action: ActionSpec,
    pub d: usize,
    pub lhs: usize,
    pub rhs: usize,
    pub terms: Vec<FiltrationTerm>,
    pub holds: bool,
}

/// `dim S_λ(V*)^G`, with `S_λ(V*)` realized inside `⊗_i Sym^{λ_i}(V*)`.
pub fn schur_invariant_dim<F: Field>(kind: ActionKind, lambda: &Partition, field: &F) -> Result<usize> {
    let dim_v = kind.dim_v();
    let schur = realize_schur(lambda, dim_v, field)?;
    let module = MonomialModule::sym_tensor(lambda.parts(), dim_v)?;
    let inv = invariants_in_module(field, &module, Axis::Cols, &kind.data())?;
    Ok(schur.space.intersect(&inv)?.dim())
}

fn gfdim_in<F: Field>(action: &ActionSpec, d: usize, field: &F) -> Result<FiltrationReport> {
    let lhs = invariant_space(action, d, field)?.space.dim();
    let terms = enumerate_partitions(d, action.dim_v())
        .into_iter()
        .map(|lambda| {
            let invariant_dim = schur_invariant_dim(action.kind, &lambda, field)?;
            let schur_dim = schur_dimension(&lambda, action.copies)
                .to_usize()
                .ok_or_else(|| Error::InvalidInput(String::from("Schur dimension overflows")))?;
            Ok(FiltrationTerm { lambda, invariant_dim, schur_dim })
        })
        .collect::<Result<Vec<_>>>()?;
    let rhs = terms.iter().map(|t| t.invariant_dim * t.schur_dim).sum();
    Ok(FiltrationReport { action: *action, d, lhs, rhs, terms, holds: lhs == rhs })
}

/// `dim K[V^m]^G_d = Σ_{λ ⊢ d, l(λ) ≤ dim V} dim S_λ(V*)^G · dim S_λ(K^m)`.
pub fn good_filtration_dim_check(action: &ActionSpec, d: usize) -> Result<FiltrationReport> {
    if !action.kind.is_connected() {
        return Err(Error::Hypothesis(format!("{} is not a connected group action", action.kind)));
    }
    let p = action.field.characteristic();
    if p != 0 && p <= action.dim_v() as u64 {
        return Err(Error::Hypothesis(format!("characteristic {p} must exceed dim V = {}", action.dim_v())));
    }
    with_field!(action.field, f => gfdim_in(action, d, &f))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertReport {
    pub kind: ActionKind,
    pub copies: usize,
    pub d_max: usize,
    pub p: u32,
    pub dims_rational: Vec<usize>,
    pub dims_prime: Vec<usize>,
    pub equal: Vec<bool>,
    pub holds: bool,
}

/// Per-degree invariant dimensions over `Q` and over `F_p`.
pub fn hilbert_compare(kind: ActionKind, copies: usize, d_max: usize, p: u32) -> Result<HilbertReport> {
    if !kind.is_connected() {
        return Err(Error::Hypothesis(format!("{kind} is not a connected group action")));
    }
    if !is_prime(u64::from(p)) {
        return Err(Error::NotPrime(u64::from(p)));
    }
    if p as usize <= kind.dim_v() {
        return Err(Error::Hypothesis(format!("p = {p} must exceed dim V = {}", kind.dim_v())));
    }
    let dims = |field: FieldSpec| -> Result<Vec<usize>> {
        let action = ActionSpec::new(kind, copies, field)?;
        with_field!(field, f => (0..=d_max).map(|d| Ok(invariant_space(&action, d, &f)?.space.dim())).collect())
    };
    let dims_rational = dims(FieldSpec::Rationals)?;
    let dims_prime = dims(FieldSpec::Prime(p))?;
    let equal: Vec<bool> = dims_rational.iter().zip(&dims_prime).map(|(a, b)| a == b).collect();
    Ok(HilbertReport { kind, copies, d_max, p, holds: equal.iter().all(|&x| x), dims_rational, dims_prime, equal })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThresholdReport {
    pub n_dim: usize,
    pub q: String,
    pub p: u64,
    /// `2Q(n+1) + n`.
    pub bound: String,
    pub holds: bool,
}

/// Exact test of `p > 2Q(n_dim + 1) + n_dim`.
pub fn characteristic_threshold_check(n_dim: usize, q: &BigRational, p: u64) -> Result<ThresholdReport> {
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    if *q < half {
        return Err(Error::Hypothesis(format!("Q = {q} is below 1/2")));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let n = BigRational::from_integer(BigInt::from(n_dim));
    let two = BigRational::from_integer(BigInt::from(2));
    let bound = &two * q * (&n + BigRational::from_integer(BigInt::from(1))) + &n;
    let holds = BigRational::from_integer(BigInt::from(p)) > bound;
    Ok(ThresholdReport { n_dim, q: format!("{q}"), p, bound: format!("{bound}"), holds })
}

/// Parses `17/2`, `8` or `8.5` exactly.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::InvalidInput(format!("not a rational number: {s:?}"));
    if let Some((int, frac)) = s.split_once('.') {
        let digits = format!("{int}{frac}");
        let num: BigInt = digits.parse().map_err(|_| bad())?;
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let den = num_traits::pow(BigInt::from(10), frac.len());
        return Ok(BigRational::new(num, den));
    }
    s.parse::<BigRational>().map_err(|_| bad())
}
