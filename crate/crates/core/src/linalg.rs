//! Sparse exact vectors and subspaces kept in reduced row echelon form.
//!
//! Every [`Subspace`] stores its canonical reduced echelon basis (pivot
//! entries equal to one, pivot columns strictly increasing, zeros above and
//! below each pivot), so two subspaces are equal iff their bases are equal.

use alloc::vec::Vec;
use core::cmp::Ordering;

use serde::Serialize;

use crate::field::{Field, FieldSpec};
use crate::{Error, Result};

/// A vector stored as `(index, value)` pairs with strictly increasing
/// indices and no zero values.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseVector<E> {
    entries: Vec<(usize, E)>,
}

impl<E: Clone> SparseVector<E> {
    pub fn zero() -> Self {
        SparseVector { entries: Vec::new() }
    }

    /// Builds a vector from arbitrary pairs: duplicate indices are summed and
    /// zeros dropped.
    pub fn from_pairs<F: Field<Elem = E>>(field: &F, mut pairs: Vec<(usize, E)>) -> Self {
        pairs.sort_by_key(|(i, _)| *i);
        let mut entries: Vec<(usize, E)> = Vec::with_capacity(pairs.len());
        for (i, v) in pairs {
            match entries.last_mut() {
                Some((j, w)) if *j == i => *w = field.add(w, &v),
                _ => entries.push((i, v)),
            }
        }
        entries.retain(|(_, v)| !field.is_zero(v));
        SparseVector { entries }
    }

    pub fn from_dense<F: Field<Elem = E>>(field: &F, values: &[E]) -> Self {
        let entries = values
            .iter()
            .enumerate()
            .filter(|(_, v)| !field.is_zero(v))
            .map(|(i, v)| (i, v.clone()))
            .collect();
        SparseVector { entries }
    }

    /// Wraps pairs that already have strictly increasing indices and no zeros.
    pub(crate) fn from_pairs_sorted(entries: Vec<(usize, E)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        SparseVector { entries }
    }

    pub fn unit<F: Field<Elem = E>>(field: &F, index: usize) -> Self {
        SparseVector { entries: alloc::vec![(index, field.one())] }
    }

    pub fn entries(&self) -> &[(usize, E)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, E)> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn leading(&self) -> Option<&(usize, E)> {
        self.entries.first()
    }

    /// Largest index carrying a nonzero entry.
    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn get(&self, index: usize) -> Option<&E> {
        self.entries
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn to_dense<F: Field<Elem = E>>(&self, field: &F, len: usize) -> Vec<E> {
        let mut out = alloc::vec![field.zero(); len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, a: &E) -> Self {
        if field.is_zero(a) {
            return Self::zero();
        }
        let entries = self
            .entries
            .iter()
            .map(|(i, v)| (*i, field.mul(a, v)))
            .filter(|(_, v)| !field.is_zero(v))
            .collect();
        SparseVector { entries }
    }

    /// `self + a * other`.
    pub fn axpy<F: Field<Elem = E>>(&self, field: &F, a: &E, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut x, mut y) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (x.peek(), y.peek()) {
                (Some((i, u)), Some((j, w))) => match i.cmp(j) {
                    Ordering::Less => {
                        out.push((*i, u.clone()));
                        x.next();
                    }
                    Ordering::Greater => {
                        out.push((*j, field.mul(a, w)));
                        y.next();
                    }
                    Ordering::Equal => {
                        let s = field.add(u, &field.mul(a, w));
                        if !field.is_zero(&s) {
                            out.push((*i, s));
                        }
                        x.next();
                        y.next();
                    }
                },
                (Some((i, u)), None) => {
                    out.push((*i, u.clone()));
                    x.next();
                }
                (None, Some((j, w))) => {
                    out.push((*j, field.mul(a, w)));
                    y.next();
                }
                (None, None) => break,
            }
        }
        out.retain(|(_, v)| !field.is_zero(v));
        SparseVector { entries: out }
    }

    /// Shifts every index by `offset`.
    pub fn shifted(&self, offset: usize) -> Self {
        SparseVector {
            entries: self.entries.iter().map(|(i, v)| (i + offset, v.clone())).collect(),
        }
    }
}

/// Size report used in JSON diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SubspaceInfo {
    pub ambient_dim: usize,
    pub dim: usize,
    pub field: FieldSpec,
}

/// A subspace of `field^ambient_dim` with its canonical reduced echelon basis.
#[derive(Debug, Clone)]
pub struct Subspace<F: Field> {
    field: F,
    ambient_dim: usize,
    rows: Vec<SparseVector<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> PartialEq for Subspace<F> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.ambient_dim == other.ambient_dim && self.rows == other.rows
    }
}

/// Binary operations of [`Subspace::combine`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombineOp {
    Sum,
    Intersect,
    Equals,
    Contains,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Combined<F: Field> {
    Space(Subspace<F>),
    Flag(bool),
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: F, ambient_dim: usize) -> Self {
        Subspace { field, ambient_dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: F, ambient_dim: usize) -> Self {
        let rows = (0..ambient_dim).map(|i| SparseVector::unit(&field, i)).collect();
        Subspace { field, ambient_dim, rows, pivots: (0..ambient_dim).collect() }
    }

    /// Reduced echelon basis of the span of `vectors`.
    pub fn span<I>(field: F, ambient_dim: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = SparseVector<F::Elem>>,
    {
        let mut s = Self::zero(field, ambient_dim);
        for v in vectors {
            s.insert(v)?;
        }
        Ok(s)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn basis(&self) -> &[SparseVector<F::Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn info(&self) -> SubspaceInfo {
        SubspaceInfo { ambient_dim: self.ambient_dim, dim: self.dim(), field: self.field.spec() }
    }

    fn check_vector(&self, v: &SparseVector<F::Elem>) -> Result<()> {
        match v.max_index() {
            Some(i) if i >= self.ambient_dim => {
                Err(Error::DimensionMismatch { expected: self.ambient_dim, got: i + 1 })
            }
            _ => Ok(()),
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                alloc::format!("{}", self.field.spec()),
                alloc::format!("{}", other.field.spec()),
            ));
        }
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, got: other.ambient_dim });
        }
        Ok(())
    }

    fn pivot_row(&self, col: usize) -> Option<usize> {
        self.pivots.binary_search(&col).ok()
    }

    /// Remainder of `v` after elimination against the basis; zero iff `v`
    /// lies in the subspace.
    pub fn reduce(&self, v: &SparseVector<F::Elem>) -> SparseVector<F::Elem> {
        let hits: Vec<(usize, F::Elem)> = v
            .entries()
            .iter()
            .filter_map(|(c, a)| self.pivot_row(*c).map(|r| (r, a.clone())))
            .collect();
        let mut out = v.clone();
        for (r, a) in hits {
            out = out.axpy(&self.field, &self.field.neg(&a), &self.rows[r]);
        }
        out
    }

    /// Adds `v` to the subspace; returns whether the dimension grew.
    pub fn insert(&mut self, v: SparseVector<F::Elem>) -> Result<bool> {
        self.check_vector(&v)?;
        let w = self.reduce(&v);
        let Some((pivot, lead)) = w.leading().cloned() else {
            return Ok(false);
        };
        let inv = self.field.inv(&lead).expect("leading entry is nonzero");
        let w = w.scale(&self.field, &inv);
        for row in self.rows.iter_mut() {
            if let Some(c) = row.get(pivot).cloned() {
                *row = row.axpy(&self.field, &self.field.neg(&c), &w);
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, w);
        Ok(true)
    }

    pub fn contains_vector(&self, v: &SparseVector<F::Elem>) -> Result<bool> {
        self.check_vector(v)?;
        Ok(self.reduce(v).is_zero())
    }

    pub fn contains(&self, other: &Self) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(other.rows.iter().all(|r| self.reduce(r).is_zero()))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r.clone())?;
        }
        Ok(s)
    }

    /// Intersection by the Zassenhaus construction: reduce the rows `[a | a]`
    /// and `[b | 0]`; rows whose left half vanishes carry the intersection.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let n = self.ambient_dim;
        let mut stacked = Subspace::zero(self.field.clone(), 2 * n);
        for a in &self.rows {
            let mut pairs = a.entries().to_vec();
            pairs.extend(a.shifted(n).into_entries());
            stacked.insert(SparseVector { entries: pairs })?;
        }
        for b in &other.rows {
            stacked.insert(b.clone())?;
        }
        let right = stacked
            .rows
            .iter()
            .zip(&stacked.pivots)
            .filter(|(_, &p)| p >= n)
            .map(|(r, _)| SparseVector {
                entries: r.entries().iter().map(|(i, v)| (i - n, v.clone())).collect(),
            });
        Subspace::span(self.field.clone(), n, right)
    }

    pub fn combine(&self, other: &Self, op: CombineOp) -> Result<Combined<F>> {
        Ok(match op {
            CombineOp::Sum => Combined::Space(self.sum(other)?),
            CombineOp::Intersect => Combined::Space(self.intersect(other)?),
            CombineOp::Equals => {
                self.check_compatible(other)?;
                Combined::Flag(self == other)
            }
            CombineOp::Contains => Combined::Flag(self.contains(other)?),
        })
    }

    /// Basis of the solution space `{x : row . x = 0 for every basis row}`,
    /// one vector per free column.
    pub fn null_space(&self) -> Vec<SparseVector<F::Elem>> {
        let mut is_pivot = alloc::vec![false; self.ambient_dim];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for free in (0..self.ambient_dim).filter(|&c| !is_pivot[c]) {
            let mut pairs = alloc::vec![(free, self.field.one())];
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                if let Some(a) = row.get(free) {
                    pairs.push((p, self.field.neg(a)));
                }
            }
            out.push(SparseVector::from_pairs(&self.field, pairs));
        }
        out
    }
}

/// Solution space of a homogeneous linear system in `n_cols` unknowns.
pub fn kernel<F, I>(field: F, n_cols: usize, equations: I) -> Result<Subspace<F>>
where
    F: Field,
    I: IntoIterator<Item = SparseVector<F::Elem>>,
{
    let rref = Subspace::span(field.clone(), n_cols, equations)?;
    Subspace::span(field, n_cols, rref.null_space())
}

/// Rank of a square matrix given densely; used to test invertibility.
pub fn rank_dense<F: Field>(field: &F, rows: &[Vec<F::Elem>]) -> usize {
    let n = rows.first().map_or(0, |r| r.len());
    let s = Subspace::span(field.clone(), n, rows.iter().map(|r| SparseVector::from_dense(field, r)));
    s.map(|s| s.dim()).unwrap_or(0)
}
