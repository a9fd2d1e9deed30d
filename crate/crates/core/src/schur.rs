//! Schur modules `S_λ(K^m)` realized inside `⊗_i Sym^{λ_i}(K^m)`.
//!
//! A column of height `h` filled with `c_1 < … < c_h` contributes the
//! determinant `det(x[r][c_s])_{r,s ≤ h}`: the wedge `e_{c_1} ∧ … ∧ e_{c_h}`
//! split over rows `1..h`. Multiplying the column determinants gives a
//! bideterminant, and `S_λ(K^m)` is the span of all of them. This is the
//! image of `⊗_j Λ^{λ†_j}(K^m) → ⊗_i Sym^{λ_i}(K^m)`, defined over the
//! integers, so its dimension is the number of semistandard tableaux in
//! every characteristic.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::field::{Field, FieldSpec};
use crate::linalg::{SparseVector, Subspace};
use crate::partitions::{schur_dimension, Partition};
use crate::poly::{poly_det, Monomial, MonomialModule, Poly};
use crate::tableaux::lr_expand_product;
use crate::{with_field, Error, Result};

/// `S_λ(K^m)` as a subspace of its ambient `⊗_i Sym^{λ_i}(K^m)`.
#[derive(Debug, Clone)]
pub struct SchurRealization<F: Field> {
    pub lambda: Partition,
    pub m: usize,
    pub ambient: MonomialModule,
    pub space: Subspace<F>,
}

/// Strictly increasing `h`-subsets of `0..m`, lexicographic.
fn subsets(m: usize, h: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, h: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == h {
            out.push(cur.clone());
            return;
        }
        for c in start..m {
            if m - c < h - cur.len() {
                break;
            }
            cur.push(c);
            rec(c + 1, m, h, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m, h, &mut Vec::new(), &mut out);
    out
}

/// Column-strict fillings of `λ` with entries in `0..m`, one per multiset of
/// columns: columns of equal height are taken in weakly increasing order
/// since their determinants commute. Each filling lists one subset per column.
pub fn column_fillings(lambda: &Partition, m: usize) -> Vec<Vec<Vec<usize>>> {
    let heights = lambda.columns();
    let mut by_height: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
    for &h in &heights {
        by_height.entry(h).or_insert_with(|| subsets(m, h));
    }
    let mut out = Vec::new();
    let mut choice: Vec<usize> = Vec::with_capacity(heights.len());
    fn rec(
        k: usize,
        heights: &[usize],
        by_height: &BTreeMap<usize, Vec<Vec<usize>>>,
        choice: &mut Vec<usize>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if k == heights.len() {
            out.push(choice.iter().zip(heights).map(|(&i, h)| by_height[h][i].clone()).collect());
            return;
        }
        let h = heights[k];
        let start = if k > 0 && heights[k - 1] == h { choice[k - 1] } else { 0 };
        for i in start..by_height[&h].len() {
            choice.push(i);
            rec(k + 1, heights, by_height, choice, out);
            choice.pop();
        }
    }
    rec(0, &heights, &by_height, &mut choice, &mut out);
    out
}

/// Product of the column determinants of a filling, as a polynomial in the
/// variables of `ambient`.
pub fn bideterminant<F: Field>(field: &F, ambient: &MonomialModule, filling: &[Vec<usize>]) -> Poly<F::Elem> {
    let nv = ambient.nvars();
    let mut acc = Poly::constant(field, nv, field.one());
    for col in filling {
        let h = col.len();
        let mat: Vec<Vec<Poly<F::Elem>>> = (0..h)
            .map(|r| col.iter().map(|&c| Poly::variable(field, nv, ambient.var(r, c))).collect())
            .collect();
        acc = acc.mul(field, &poly_det(field, nv, &mat));
    }
    acc
}

pub fn realize_schur<F: Field>(lambda: &Partition, m: usize, field: &F) -> Result<SchurRealization<F>> {
    let ambient = MonomialModule::sym_tensor(lambda.parts(), m)?;
    let mut space = Subspace::zero(field.clone(), ambient.dim());
    for filling in column_fillings(lambda, m) {
        let p = bideterminant(field, &ambient, &filling);
        space.insert(ambient.vector_from_poly(field, &p)?)?;
    }
    Ok(SchurRealization { lambda: lambda.clone(), m, ambient, space })
}

/// Image of `S_λ(K^a)` under the coordinate inclusion `K^a ↪ K^b`.
#[derive(Debug, Clone)]
pub struct SchurEmbedding<F: Field> {
    pub lambda: Partition,
    pub a: usize,
    pub b: usize,
    /// `⊗_i Sym^{λ_i}(K^b)`.
    pub ambient: MonomialModule,
    pub image: Subspace<F>,
}

pub fn embed<F: Field>(source: &SchurRealization<F>, b: usize) -> Result<SchurEmbedding<F>> {
    if b < source.m {
        return Err(Error::InvalidInput(alloc::format!("b = {b} is smaller than a = {}", source.m)));
    }
    let field = source.space.field().clone();
    let ambient = source.ambient.with_cols(b)?;
    let vectors = source
        .space
        .basis()
        .iter()
        .map(|v| source.ambient.embed_vector(&field, &ambient, v))
        .collect::<Result<Vec<_>>>()?;
    let image = Subspace::span(field, ambient.dim(), vectors)?;
    Ok(SchurEmbedding { lambda: source.lambda.clone(), a: source.m, b, ambient, image })
}

/// The multiplication map `S_λ(K^m) ⊗ S_μ(K^m) → S_{λ+μ}(K^m)`, which on
/// bideterminants merges the two column multisets.
#[derive(Debug, Clone)]
pub struct ConcatProjection<F: Field> {
    pub lambda: Partition,
    pub mu: Partition,
    pub m: usize,
    pub domain_dim: usize,
    /// Image of the tensor basis, inside the ambient of `λ + μ`.
    pub image: Subspace<F>,
    pub target: SchurRealization<F>,
}

impl<F: Field> ConcatProjection<F> {
    pub fn rank(&self) -> usize {
        self.image.dim()
    }

    pub fn kernel_dim(&self) -> usize {
        self.domain_dim - self.rank()
    }

    pub fn is_surjective(&self) -> bool {
        self.image == self.target.space
    }
}

fn pad(m: &Monomial, nvars: usize) -> Monomial {
    let mut e = m.0.clone();
    e.resize(nvars, 0);
    Monomial(e)
}

pub fn concat_projection<F: Field>(
    lambda: &Partition,
    mu: &Partition,
    m: usize,
    field: &F,
) -> Result<ConcatProjection<F>> {
    let left = realize_schur(lambda, m, field)?;
    let right = realize_schur(mu, m, field)?;
    let target = realize_schur(&(lambda + mu), m, field)?;
    let nv = target.ambient.nvars();
    // rows of λ and μ both sit on the first rows of λ + μ, so variable indices agree after padding
    let lift = |module: &MonomialModule, v: &SparseVector<F::Elem>| {
        let mut p = Poly::zero();
        for (i, c) in v.entries() {
            p.add_term(field, pad(module.monomial(*i), nv), c.clone());
        }
        p
    };
    let lefts: Vec<_> = left.space.basis().iter().map(|v| lift(&left.ambient, v)).collect();
    let rights: Vec<_> = right.space.basis().iter().map(|v| lift(&right.ambient, v)).collect();
    let mut image = Subspace::zero(field.clone(), target.ambient.dim());
    for a in &lefts {
        for b in &rights {
            image.insert(target.ambient.vector_from_poly(field, &a.mul(field, b))?)?;
        }
    }
    Ok(ConcatProjection {
        lambda: lambda.clone(),
        mu: mu.clone(),
        m,
        domain_dim: left.space.dim() * right.space.dim(),
        image,
        target,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SchurReport {
    pub lambda: Partition,
    pub m: usize,
    pub field: FieldSpec,
    pub ambient_dim: usize,
    pub space_dim: usize,
    pub expected_dim: u64,
    pub matches: bool,
}

pub fn schur_report(lambda: &Partition, m: usize, field: FieldSpec) -> Result<SchurReport> {
    let space_dim = with_field!(field, f => realize_schur(lambda, m, &f)?.space.dim());
    let ambient_dim = MonomialModule::sym_tensor(lambda.parts(), m)?.dim();
    let expected_dim = schur_dimension(lambda, m).to_u64().unwrap_or(u64::MAX);
    Ok(SchurReport {
        lambda: lambda.clone(),
        m,
        field,
        ambient_dim,
        space_dim,
        expected_dim,
        matches: space_dim as u64 == expected_dim,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbedReport {
    pub lambda: Partition,
    pub a: usize,
    pub b: usize,
    pub field: FieldSpec,
    pub ambient_dim: usize,
    pub image_dim: usize,
    pub target_dim: usize,
    pub contained: bool,
}

pub fn embed_report(lambda: &Partition, a: usize, b: usize, field: FieldSpec) -> Result<EmbedReport> {
    with_field!(field, f => {
        let src = realize_schur(lambda, a, &f)?;
        let emb = embed(&src, b)?;
        let target = realize_schur(lambda, b, &f)?;
        Ok(EmbedReport {
            lambda: lambda.clone(),
            a,
            b,
            field,
            ambient_dim: emb.ambient.dim(),
            image_dim: emb.image.dim(),
            target_dim: target.space.dim(),
            contained: target.space.contains(&emb.image)?,
        })
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConcatReport {
    pub lambda: Partition,
    pub mu: Partition,
    pub m: usize,
    pub field: FieldSpec,
    pub domain_dim: usize,
    pub rank: usize,
    pub kernel_dim: usize,
    pub target_dim: usize,
    pub surjective: bool,
    /// `Σ_{ν ≠ λ+μ} c^ν_{λμ} · dim S_ν(K^m)`.
    pub lr_kernel_dim: u64,
    pub kernel_matches_lr: bool,
}

pub fn concat_report(lambda: &Partition, mu: &Partition, m: usize, field: FieldSpec) -> Result<ConcatReport> {
    let top = lambda + mu;
    let lr_kernel_dim: u64 = lr_expand_product(lambda, mu, m)
        .iter()
        .filter(|t| t.nu != top)
        .map(|t| t.multiplicity * schur_dimension(&t.nu, m).to_u64().unwrap_or(u64::MAX))
        .sum();
    with_field!(field, f => {
        let pi = concat_projection(lambda, mu, m, &f)?;
        Ok(ConcatReport {
            lambda: lambda.clone(),
            mu: mu.clone(),
            m,
            field,
            domain_dim: pi.domain_dim,
            rank: pi.rank(),
            kernel_dim: pi.kernel_dim(),
            target_dim: pi.target.space.dim(),
            surjective: pi.is_surjective(),
            lr_kernel_dim,
            kernel_matches_lr: pi.kernel_dim() as u64 == lr_kernel_dim,
        })
    })
}
