//! GL-spans `⟨S⟩_{GL_m}`: the smallest `GL_m`-stable subspace containing `S`.
//!
//! `GL_m` acts on the column index of a [`MonomialModule`]. The span is
//! computed as a fixpoint of two closure rules applied to a spanning set:
//!
//! 1. split every vector into its column-weight components (torus stability);
//! 2. apply the operators `E(i, j, r)`: the coefficient of `t^r` after the
//!    substitution `x[a][j] ↦ x[a][j] + t·x[a][i]` for every row `a`.
//!
//! The coefficients are binomials, so the operators are defined over the
//! integers and exact in every characteristic. A subspace closed under all
//! `E(i, j, r)` is stable under every root subgroup `I + tE_{ij}` for `t` in any
//! extension field, and with torus stability under all of `GL_m` over the
//! algebraic closure. Conversely every stable subspace is closed under the rules
//! (Vandermonde over an infinite field), so the fixpoint is the GL-span over the
//! algebraic closure of the base field, not the span under `GL_m(F_p)`.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::field::{Field, FieldSpec};
use crate::linalg::{rank_dense, SparseVector, Subspace};
use crate::partitions::{slice_decomposition, Partition, SliceDecomposition};
use crate::poly::{Axis, AxisSubstitution, Monomial, MonomialModule, Poly};
use crate::schur::{embed, realize_schur, SchurRealization};
use crate::{with_field, Error, Result};

/// `E(i, j, r)`: coefficient of `t^r` under `column j ← column j + t·column i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OneParamOperator {
    pub i: usize,
    pub j: usize,
    pub r: usize,
}

fn binom_u64(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, t| acc * (n - t) / (t + 1))
}

/// Applies `E(i, j, r)` to a vector of `module`.
pub fn apply_operator<F: Field>(
    field: &F,
    module: &MonomialModule,
    v: &SparseVector<F::Elem>,
    op: OneParamOperator,
) -> Result<SparseVector<F::Elem>> {
    let m = module.cols();
    if op.i >= m || op.j >= m || op.i == op.j {
        return Err(Error::IndexOutOfRange(format!(
            "operator columns ({}, {}) must be distinct and below {m}",
            op.i, op.j
        )));
    }
    if op.r == 0 {
        return Err(Error::InvalidInput(String::from("extraction order r must be at least 1")));
    }
    let rows = module.rows();
    let mut pairs = Vec::new();
    let mut k = alloc::vec![0usize; rows];
    for (idx, c) in v.entries() {
        let mono = module.monomial(*idx);
        let e: Vec<usize> = (0..rows).map(|a| mono.0[module.var(a, op.j)] as usize).collect();
        if e.iter().sum::<usize>() < op.r {
            continue;
        }
        // distribute r extractions over the rows, k[a] ≤ e[a]
        distribute(&e, op.r, 0, &mut k, &mut |k| {
            let mut out: Monomial = mono.clone();
            let mut coeff = 1u64;
            for a in 0..rows {
                if k[a] > 0 {
                    out.0[module.var(a, op.j)] -= k[a] as u8;
                    out.0[module.var(a, op.i)] += k[a] as u8;
                    coeff *= binom_u64(e[a] as u64, k[a] as u64);
                }
            }
            let j = module.index_of(&out).expect("operator preserves the module grading");
            pairs.push((j, field.mul(c, &field.from_u64(coeff))));
        });
    }
    Ok(SparseVector::from_pairs(field, pairs))
}

fn distribute(e: &[usize], rest: usize, a: usize, k: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if a == e.len() {
        if rest == 0 {
            f(k);
        }
        return;
    }
    let tail: usize = e[a + 1..].iter().sum();
    let lo = rest.saturating_sub(tail);
    for x in lo..=e[a].min(rest) {
        k[a] = x;
        distribute(e, rest - x, a + 1, k, f);
    }
    k[a] = 0;
}

/// Splits a vector into its column-weight components.
pub fn weight_components<F: Field>(
    module: &MonomialModule,
    v: &SparseVector<F::Elem>,
) -> BTreeMap<Vec<usize>, SparseVector<F::Elem>> {
    let mut parts: BTreeMap<Vec<usize>, Vec<(usize, F::Elem)>> = BTreeMap::new();
    for (i, c) in v.entries() {
        parts.entry(module.column_weights(module.monomial(*i))).or_default().push((*i, c.clone()));
    }
    // entries stay sorted, so no re-normalization is needed
    parts
        .into_iter()
        .map(|(w, pairs)| (w, SparseVector::from_pairs_sorted(pairs)))
        .collect()
}

/// `⟨S⟩_{GL_m}` inside `module`, with `GL_m` acting on columns.
pub fn gl_closure<F: Field>(s: &Subspace<F>, module: &MonomialModule) -> Result<Subspace<F>> {
    if s.ambient_dim() != module.dim() {
        return Err(Error::DimensionMismatch { expected: module.dim(), got: s.ambient_dim() });
    }
    let field = s.field().clone();
    let mut closure = Subspace::zero(field.clone(), module.dim());
    let mut queue = VecDeque::new();
    for v in s.basis() {
        for (_, comp) in weight_components::<F>(module, v) {
            if closure.insert(comp.clone())? {
                queue.push_back(comp);
            }
        }
    }
    let m = module.cols();
    while let Some(v) = queue.pop_front() {
        for i in 0..m {
            for j in (0..m).filter(|&j| j != i) {
                let top = v
                    .entries()
                    .iter()
                    .map(|(idx, _)| module.column_weights(module.monomial(*idx))[j])
                    .max()
                    .unwrap_or(0);
                for r in 1..=top {
                    let w = apply_operator(&field, module, &v, OneParamOperator { i, j, r })?;
                    if !w.is_zero() && closure.insert(w.clone())? {
                        queue.push_back(w);
                    }
                }
            }
        }
    }
    Ok(closure)
}

/// Draws an invertible `m × m` matrix.
pub fn random_invertible<F: Field, R: rand::Rng>(field: &F, m: usize, rng: &mut R) -> Vec<Vec<F::Elem>> {
    loop {
        let g: Vec<Vec<F::Elem>> = (0..m).map(|_| (0..m).map(|_| field.sample(rng)).collect()).collect();
        if rank_dense(field, &g) == m {
            return g;
        }
    }
}

/// Span of `S` together with `g·s` for `trials` random invertible `g` and every
/// basis vector `s`. Always contained in [`gl_closure`]; used as an
/// independent lower bound.
pub fn random_group_span<F: Field>(
    s: &Subspace<F>,
    module: &MonomialModule,
    trials: usize,
    seed: u64,
) -> Result<Subspace<F>> {
    let field = s.field().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = s.clone();
    for _ in 0..trials {
        let g = random_invertible(&field, module.cols(), &mut rng);
        let sub = AxisSubstitution::constant(&field, Axis::Cols, &g);
        for v in s.basis() {
            if let Some(w) = sub.apply(&field, module, v)?.remove(&0) {
                out.insert(w)?;
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolarizationReport {
    pub lambda: Partition,
    pub a: usize,
    pub b: usize,
    pub field: FieldSpec,
    /// The span is taken under `GL_b` over the algebraic closure of `field`.
    pub group: String,
    pub equal: bool,
    /// `(dim ⟨S_λ(K^a)⟩_{GL_b}, dim S_λ(K^b))`.
    pub dims: (usize, usize),
    pub source_dim: usize,
    pub ambient_dim: usize,
    /// Whether degree-`|λ|` polynomial representations are semisimple over `field`.
    pub semisimple_degree: bool,
}

fn group_label(b: usize, field: FieldSpec) -> String {
    format!("GL_{b} over the algebraic closure of {field}")
}

fn polarization_check_in<F: Field>(lambda: &Partition, a: usize, b: usize, field: &F) -> Result<PolarizationReport> {
    if a > b {
        return Err(Error::InvalidInput(format!("a = {a} exceeds b = {b}")));
    }
    let source: SchurRealization<F> = realize_schur(lambda, a, field)?;
    let embedded = embed(&source, b)?;
    let closure = gl_closure(&embedded.image, &embedded.ambient)?;
    let target = realize_schur(lambda, b, field)?;
    let spec = field.spec();
    Ok(PolarizationReport {
        lambda: lambda.clone(),
        a,
        b,
        field: spec,
        group: group_label(b, spec),
        equal: closure == target.space,
        dims: (closure.dim(), target.space.dim()),
        source_dim: source.space.dim(),
        ambient_dim: embedded.ambient.dim(),
        semisimple_degree: spec.polynomial_reps_semisimple(lambda.size()),
    })
}

/// Is `⟨S_λ(K^a)⟩_{GL_b} = S_λ(K^b)`?
pub fn polarization_equality_check(lambda: &Partition, a: usize, b: usize, field: FieldSpec) -> Result<PolarizationReport> {
    with_field!(field, f => polarization_check_in(lambda, a, b, &f))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PieceReport {
    pub piece: Partition,
    pub size: usize,
    /// `dim ⟨S_μ(K^n)⟩_{GL_m}` and `dim S_μ(K^m)`.
    pub dims: (usize, usize),
    pub polarizes: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SlicingReport {
    pub lambda: Partition,
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub field: FieldSpec,
    /// `n · ⌈|λ| / (n(k-1))⌉`, the dimension of the source space.
    pub a: usize,
    pub slicing: SliceDecomposition,
    pub pieces: Vec<PieceReport>,
    pub equal: bool,
    pub dims: (usize, usize),
}

/// Checks `⟨S_λ(K^a)⟩_{GL_m} = S_λ(K^m)` for `a = n⌈|λ|/(n(k-1))⌉` when
/// `l(λ) ≤ n` and the characteristic is 0 or exceeds `kn`, recording the
/// slicing of `λ` and whether each piece polarizes from `K^n`.
pub fn slicing_polarization_check(
    lambda: &Partition,
    n: usize,
    k: usize,
    m: usize,
    field: FieldSpec,
) -> Result<SlicingReport> {
    if lambda.length() > n {
        return Err(Error::Hypothesis(format!("l({lambda}) = {} exceeds n = {n}", lambda.length())));
    }
    if k < 2 {
        return Err(Error::Hypothesis(format!("k = {k} must be at least 2")));
    }
    let p = field.characteristic();
    if p != 0 && p <= (k * n) as u64 {
        return Err(Error::Hypothesis(format!("characteristic {p} must exceed kn = {}", k * n)));
    }
    let d = lambda.size();
    let a = n * d.div_ceil(n * (k - 1));
    if m < a {
        return Err(Error::Hypothesis(format!("m = {m} is below n·⌈d/(n(k-1))⌉ = {a}")));
    }
    let slicing = slice_decomposition(lambda, n, k)?;
    let pieces = slicing
        .pieces
        .iter()
        .map(|piece| {
            let r = polarization_equality_check(piece, n, m, field)?;
            Ok(PieceReport { piece: piece.clone(), size: piece.size(), dims: r.dims, polarizes: r.equal })
        })
        .collect::<Result<Vec<_>>>()?;
    let whole = polarization_equality_check(lambda, a, m, field)?;
    Ok(SlicingReport {
        lambda: lambda.clone(),
        n,
        k,
        m,
        field,
        a,
        slicing,
        pieces,
        equal: whole.equal,
        dims: whole.dims,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TensorPolarizationReport {
    pub mu: Partition,
    pub nu: Partition,
    pub dim_v1: usize,
    pub dim_v2: usize,
    pub m: usize,
    pub field: FieldSpec,
    pub equal: bool,
    /// `(dim ⟨S_μ(V₁) ⊗ S_ν(V₂)⟩_{GL_m}, dim S_μ(K^m) ⊗ S_ν(K^m))`.
    pub dims: (usize, usize),
}

/// Places the basis of a realization into the joint ambient, rows shifted by
/// `row_offset`, columns renamed by `col_map`.
fn placed<F: Field>(
    field: &F,
    real: &SchurRealization<F>,
    target: &MonomialModule,
    row_offset: usize,
    col_map: &dyn Fn(usize) -> usize,
) -> Vec<Poly<F::Elem>> {
    let src = &real.ambient;
    real.space
        .basis()
        .iter()
        .map(|v| {
            let mut p = Poly::zero();
            for (i, c) in v.entries() {
                let mono = src.monomial(*i);
                let mut e = alloc::vec![0u8; target.nvars()];
                for r in 0..src.rows() {
                    for col in 0..src.cols() {
                        e[target.var(r + row_offset, col_map(col))] = mono.0[src.var(r, col)];
                    }
                }
                p.add_term(field, Monomial(e), c.clone());
            }
            p
        })
        .collect()
}

fn tensor_span<F: Field>(
    field: &F,
    target: &MonomialModule,
    left: &[Poly<F::Elem>],
    right: &[Poly<F::Elem>],
) -> Result<Subspace<F>> {
    let mut s = Subspace::zero(field.clone(), target.dim());
    for a in left {
        for b in right {
            s.insert(target.vector_from_poly(field, &a.mul(field, b))?)?;
        }
    }
    Ok(s)
}

/// Compares `⟨S_μ(V₁) ⊗ S_ν(V₂)⟩_{GL_m}` with `S_μ(K^m) ⊗ S_ν(K^m)` where
/// `V₁, V₂` are spanned by disjoint runs of coordinates of `K^m`.
pub fn tensor_polarization_check(
    mu: &Partition,
    nu: &Partition,
    dim_v1: usize,
    dim_v2: usize,
    m: usize,
    field: FieldSpec,
) -> Result<TensorPolarizationReport> {
    if dim_v1 + dim_v2 > m {
        return Err(Error::Hypothesis(format!("dim V1 + dim V2 = {} exceeds m = {m}", dim_v1 + dim_v2)));
    }
    with_field!(field, f => {
        let mut rows = mu.parts().to_vec();
        rows.extend_from_slice(nu.parts());
        let ambient = MonomialModule::sym_tensor(&rows, m)?;
        let off = mu.length();
        let s1 = realize_schur(mu, dim_v1, &f)?;
        let s2 = realize_schur(nu, dim_v2, &f)?;
        let source = tensor_span(
            &f,
            &ambient,
            &placed(&f, &s1, &ambient, 0, &|c| c),
            &placed(&f, &s2, &ambient, off, &|c| c + dim_v1),
        )?;
        let w1 = realize_schur(mu, m, &f)?;
        let w2 = realize_schur(nu, m, &f)?;
        let target = tensor_span(
            &f,
            &ambient,
            &placed(&f, &w1, &ambient, 0, &|c| c),
            &placed(&f, &w2, &ambient, off, &|c| c),
        )?;
        let closure = gl_closure(&source, &ambient)?;
        Ok(TensorPolarizationReport {
            mu: mu.clone(),
            nu: nu.clone(),
            dim_v1,
            dim_v2,
            m,
            field,
            equal: closure == target,
            dims: (closure.dim(), target.dim()),
        })
    })
}
