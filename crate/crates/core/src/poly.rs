//! Monomial modules: graded pieces of polynomial rings in a grid of variables
//! `x[r][c]`, with a fixed canonical monomial basis.
//!
//! Two shapes are used throughout:
//!
//! - `⊗_i Sym^{d_i}(K^m)`: row `i` holds a copy of `K^m` and every monomial has
//!   degree exactly `d_i` in row `i` (Schur module ambients);
//! - `Sym^d(K^n ⊗ K^m)`: all degree-`d` monomials in an `n × m` grid
//!   (polynomials on `m` copies of an `n`-dimensional space, one copy per column).
//!
//! `GL_m` always acts on the column index. Group actions on the coordinates of
//! `V` act on whichever axis holds them, see [`Axis`].

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use serde::Serialize;

use crate::field::Field;
use crate::linalg::SparseVector;
use crate::{Error, Result};

/// Exponent vector over the variables of a grid, row-major.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<u8>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(alloc::vec![0; nvars])
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

/// A polynomial as a map from monomials to nonzero coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly<E> {
    terms: BTreeMap<Monomial, E>,
}

impl<E: Clone> Default for Poly<E> {
    fn default() -> Self {
        Poly { terms: BTreeMap::new() }
    }
}

impl<E: Clone> Poly<E> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant<F: Field<Elem = E>>(field: &F, nvars: usize, c: E) -> Self {
        let mut p = Self::zero();
        p.add_term(field, Monomial::one(nvars), c);
        p
    }

    pub fn variable<F: Field<Elem = E>>(field: &F, nvars: usize, var: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.0[var] = 1;
        let mut p = Self::zero();
        p.add_term(field, m, field.one());
        p
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, E> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term<F: Field<Elem = E>>(&mut self, field: &F, m: Monomial, c: E) {
        if field.is_zero(&c) {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let s = field.add(e.get(), &c);
                if field.is_zero(&s) {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(field, m.clone(), c.clone());
        }
        out
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, a: &E) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(field, m.clone(), field.mul(a, c));
        }
        out
    }

    pub fn mul<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(field, m1.mul(m2), field.mul(c1, c2));
            }
        }
        out
    }
}

/// Determinant of a square matrix of polynomials by expansion along the first
/// row (the matrices here are at most a handful of rows).
pub fn poly_det<F: Field>(field: &F, nvars: usize, m: &[Vec<Poly<F::Elem>>]) -> Poly<F::Elem> {
    let n = m.len();
    if n == 0 {
        return Poly::constant(field, nvars, field.one());
    }
    let cols: Vec<usize> = (0..n).collect();
    det_rec(field, nvars, m, 0, &cols)
}

fn det_rec<F: Field>(
    field: &F,
    nvars: usize,
    m: &[Vec<Poly<F::Elem>>],
    row: usize,
    cols: &[usize],
) -> Poly<F::Elem> {
    if cols.len() == 1 {
        return m[row][cols[0]].clone();
    }
    let mut acc = Poly::zero();
    for (k, &c) in cols.iter().enumerate() {
        if m[row][c].is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = det_rec(field, nvars, m, row + 1, &rest);
        let mut term = m[row][c].mul(field, &minor);
        if k % 2 == 1 {
            term = term.scale(field, &field.from_i64(-1));
        }
        acc = acc.add(field, &term);
    }
    acc
}

/// Renders a polynomial as `c*x^e*y + …` with terms in descending monomial
/// order and unit coefficients omitted.
pub fn format_poly<F: Field>(field: &F, p: &Poly<F::Elem>, name: &dyn Fn(usize) -> String) -> String {
    if p.is_zero() {
        return String::from("0");
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().iter().rev().enumerate() {
        let shown = field.display(c);
        let (negative, magnitude) = match shown.strip_prefix('-') {
            Some(rest) => (true, String::from(rest)),
            None => (false, shown),
        };
        let mut factors = Vec::new();
        if magnitude != "1" || m.degree() == 0 {
            factors.push(magnitude);
        }
        for (v, &e) in m.0.iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(name(v)),
                _ => factors.push(format!("{}^{e}", name(v))),
            }
        }
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&factors.join("*"));
    }
    out
}

/// Shape of a [`MonomialModule`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Grading {
    /// `⊗_i Sym^{rows[i]}(K^m)`.
    SymTensor { row_degrees: Vec<usize> },
    /// `Sym^d(K^n ⊗ K^m)` with `n` rows.
    SymOfTensor { degree: usize },
}

/// Axis of the variable grid a substitution acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Rows,
    Cols,
}

/// A graded polynomial module with a canonical monomial basis, ordered
/// lexicographically from the largest exponent vector down. All basis
/// monomials share one total degree, so this is also graded-lex order.
#[derive(Debug, Clone)]
pub struct MonomialModule {
    rows: usize,
    cols: usize,
    grading: Grading,
    basis: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
}

impl PartialEq for MonomialModule {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.grading == other.grading
    }
}

/// Compositions of `total` into `parts` non-negative parts, lexicographically
/// largest first.
fn compositions(total: usize, parts: usize) -> Vec<Vec<u8>> {
    fn rec(rest: usize, slots: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if slots == 1 {
            cur.push(rest as u8);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for first in (0..=rest).rev() {
            cur.push(first as u8);
            rec(rest - first, slots - 1, cur, out);
            cur.pop();
        }
    }
    if parts == 0 {
        return if total == 0 { alloc::vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    rec(total, parts, &mut Vec::new(), &mut out);
    out
}

impl MonomialModule {
    /// `⊗_i Sym^{row_degrees[i]}(K^m)`.
    pub fn sym_tensor(row_degrees: &[usize], m: usize) -> Result<Self> {
        if row_degrees.iter().any(|&d| d > u8::MAX as usize) {
            return Err(Error::InvalidInput(format!("row degree too large: {row_degrees:?}")));
        }
        let mut basis: Vec<Vec<u8>> = alloc::vec![Vec::new()];
        for &d in row_degrees {
            let row = compositions(d, m);
            let mut next = Vec::with_capacity(basis.len() * row.len());
            for prefix in &basis {
                for r in &row {
                    let mut v = prefix.clone();
                    v.extend_from_slice(r);
                    next.push(v);
                }
            }
            basis = next;
        }
        Ok(Self::from_basis(
            row_degrees.len(),
            m,
            Grading::SymTensor { row_degrees: row_degrees.to_vec() },
            basis.into_iter().map(Monomial).collect(),
        ))
    }

    /// `Sym^d(K^n ⊗ K^m)`: degree-`d` polynomials in an `n × m` grid.
    pub fn sym_of_tensor(d: usize, n: usize, m: usize) -> Result<Self> {
        if d > u8::MAX as usize {
            return Err(Error::InvalidInput(format!("degree {d} too large")));
        }
        let basis = compositions(d, n * m).into_iter().map(Monomial).collect();
        Ok(Self::from_basis(n, m, Grading::SymOfTensor { degree: d }, basis))
    }

    fn from_basis(rows: usize, cols: usize, grading: Grading, basis: Vec<Monomial>) -> Self {
        let index = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        MonomialModule { rows, cols, grading, basis, index }
    }

    /// Same shape with `m` columns.
    pub fn with_cols(&self, m: usize) -> Result<Self> {
        match &self.grading {
            Grading::SymTensor { row_degrees } => Self::sym_tensor(row_degrees, m),
            Grading::SymOfTensor { degree } => Self::sym_of_tensor(*degree, self.rows, m),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.rows * self.cols
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn var(&self, row: usize, col: usize) -> usize {
        row * self.cols + col
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn monomial(&self, i: usize) -> &Monomial {
        &self.basis[i]
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Degrees along each column (the `GL_m` torus weight).
    pub fn column_weights(&self, m: &Monomial) -> Vec<usize> {
        (0..self.cols).map(|c| (0..self.rows).map(|r| m.0[self.var(r, c)] as usize).sum()).collect()
    }

    /// Degrees along each row.
    pub fn row_degrees(&self, m: &Monomial) -> Vec<usize> {
        (0..self.rows).map(|r| (0..self.cols).map(|c| m.0[self.var(r, c)] as usize).sum()).collect()
    }

    /// Degrees along the lines parallel to `axis`: for `Axis::Rows` (a group
    /// acting on the row index) these are the column weights and vice versa.
    /// Substitutions along `axis` preserve them.
    pub fn transverse_degrees(&self, m: &Monomial, axis: Axis) -> Vec<usize> {
        match axis {
            Axis::Rows => self.column_weights(m),
            Axis::Cols => self.row_degrees(m),
        }
    }

    pub fn vector_from_poly<F: Field>(&self, field: &F, p: &Poly<F::Elem>) -> Result<SparseVector<F::Elem>> {
        let pairs = p
            .terms()
            .iter()
            .map(|(m, c)| {
                self.index_of(m)
                    .map(|i| (i, c.clone()))
                    .ok_or_else(|| Error::InvalidInput(format!("monomial {:?} is not in the module", m.0)))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SparseVector::from_pairs(field, pairs))
    }

    pub fn poly_from_vector<F: Field>(&self, field: &F, v: &SparseVector<F::Elem>) -> Poly<F::Elem> {
        let mut p = Poly::zero();
        for (i, c) in v.entries() {
            p.add_term(field, self.basis[*i].clone(), c.clone());
        }
        p
    }

    /// Maps a vector along the coordinate inclusion `K^a ↪ K^b` on columns
    /// (first `a` coordinates) into `target`, which must have the same rows
    /// and grading and at least as many columns.
    pub fn embed_vector<F: Field>(
        &self,
        field: &F,
        target: &MonomialModule,
        v: &SparseVector<F::Elem>,
    ) -> Result<SparseVector<F::Elem>> {
        let same_shape = match (&self.grading, &target.grading) {
            (Grading::SymTensor { row_degrees: a }, Grading::SymTensor { row_degrees: b }) => a == b,
            (Grading::SymOfTensor { degree: a }, Grading::SymOfTensor { degree: b }) => a == b,
            _ => false,
        };
        if !same_shape || self.rows != target.rows {
            return Err(Error::InvalidInput(format!(
                "cannot embed {:?} into {:?}",
                self.grading, target.grading
            )));
        }
        if target.cols < self.cols {
            return Err(Error::InvalidInput(format!(
                "target has {} columns, fewer than {}",
                target.cols, self.cols
            )));
        }
        let pairs = v
            .entries()
            .iter()
            .map(|(i, c)| {
                let src = &self.basis[*i];
                let mut e = alloc::vec![0u8; target.nvars()];
                for r in 0..self.rows {
                    for col in 0..self.cols {
                        e[target.var(r, col)] = src.0[self.var(r, col)];
                    }
                }
                let j = target.index_of(&Monomial(e)).expect("embedded monomial lies in target");
                (j, c.clone())
            })
            .collect();
        Ok(SparseVector::from_pairs(field, pairs))
    }
}

/// A polynomial in `t` with field coefficients, as `(power, coefficient)` pairs.
pub type TPoly<E> = Vec<(u32, E)>;

/// Linear substitution of the coordinates along one axis,
/// `x[.., c] ↦ Σ_{c'} matrix[c][c'](t) · x[.., c']`, where each entry is a
/// polynomial in a formal parameter `t`.
#[derive(Debug, Clone)]
pub struct AxisSubstitution<E> {
    pub axis: Axis,
    pub matrix: Vec<Vec<TPoly<E>>>,
}

impl<E: Clone> AxisSubstitution<E> {
    /// Builds a substitution from an integer matrix over `Z[t]`.
    pub fn from_integer<F: Field<Elem = E>>(field: &F, axis: Axis, m: &[Vec<Vec<(u32, i64)>>]) -> Self {
        let matrix = m
            .iter()
            .map(|row| {
                row.iter()
                    .map(|entry| {
                        entry
                            .iter()
                            .map(|(k, c)| (*k, field.from_i64(*c)))
                            .filter(|(_, c)| !field.is_zero(c))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        AxisSubstitution { axis, matrix }
    }

    /// A constant matrix (no `t`).
    pub fn constant<F: Field<Elem = E>>(field: &F, axis: Axis, m: &[Vec<E>]) -> Self {
        let matrix = m
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| if field.is_zero(c) { Vec::new() } else { alloc::vec![(0, c.clone())] })
                    .collect()
            })
            .collect();
        AxisSubstitution { axis, matrix }
    }

    fn image(&self, module: &MonomialModule, var: usize) -> Vec<(u32, usize, E)> {
        let (r, c) = (var / module.cols, var % module.cols);
        let mut out = Vec::new();
        match self.axis {
            Axis::Rows => {
                for (r2, entry) in self.matrix[r].iter().enumerate() {
                    for (k, a) in entry {
                        out.push((*k, module.var(r2, c), a.clone()));
                    }
                }
            }
            Axis::Cols => {
                for (c2, entry) in self.matrix[c].iter().enumerate() {
                    for (k, a) in entry {
                        out.push((*k, module.var(r, c2), a.clone()));
                    }
                }
            }
        }
        out
    }

    fn check(&self, module: &MonomialModule) -> Result<()> {
        let n = match self.axis {
            Axis::Rows => module.rows,
            Axis::Cols => module.cols,
        };
        if self.matrix.len() != n || self.matrix.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, got: self.matrix.len() });
        }
        Ok(())
    }

    /// Image of one monomial, keyed by `(t-power, monomial)`.
    pub fn apply_monomial<F: Field<Elem = E>>(
        &self,
        field: &F,
        module: &MonomialModule,
        m: &Monomial,
    ) -> Result<BTreeMap<(u32, Monomial), E>> {
        self.check(module)?;
        let mut acc: BTreeMap<(u32, Monomial), E> = BTreeMap::new();
        acc.insert((0, Monomial::one(module.nvars())), field.one());
        for (var, &e) in m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let img = self.image(module, var);
            for _ in 0..e {
                let mut next: BTreeMap<(u32, Monomial), E> = BTreeMap::new();
                for ((k, mono), c) in &acc {
                    for (k2, v2, a) in &img {
                        let mut m2 = mono.clone();
                        m2.0[*v2] += 1;
                        let coeff = field.mul(c, a);
                        let slot = next.entry((k + k2, m2)).or_insert_with(|| field.zero());
                        *slot = field.add(slot, &coeff);
                    }
                }
                next.retain(|_, c| !field.is_zero(c));
                acc = next;
            }
        }
        Ok(acc)
    }

    /// Image of a module vector, split by powers of `t`.
    pub fn apply<F: Field<Elem = E>>(
        &self,
        field: &F,
        module: &MonomialModule,
        v: &SparseVector<E>,
    ) -> Result<BTreeMap<u32, SparseVector<E>>> {
        let mut by_power: BTreeMap<u32, Vec<(usize, E)>> = BTreeMap::new();
        for (i, c) in v.entries() {
            for ((k, mono), a) in self.apply_monomial(field, module, &module.basis[*i])? {
                let j = module
                    .index_of(&mono)
                    .ok_or_else(|| Error::InvalidInput(format!("substitution leaves the module at {:?}", mono.0)))?;
                by_power.entry(k).or_default().push((j, field.mul(c, &a)));
            }
        }
        Ok(by_power
            .into_iter()
            .map(|(k, pairs)| (k, SparseVector::from_pairs(field, pairs)))
            .filter(|(_, v)| !v.is_zero())
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::partitions::binomial;
    use alloc::vec;
    use num_bigint::BigUint;

    #[test]
    fn module_sizes() {
        let m = MonomialModule::sym_tensor(&[2], 2).unwrap();
        assert_eq!(m.dim(), 3);
        assert_eq!(m.monomial(0).0, vec![2, 0]);
        assert_eq!(m.monomial(2).0, vec![0, 2]);
        let m = MonomialModule::sym_tensor(&[2, 1], 3).unwrap();
        assert_eq!(m.dim(), 6 * 3);
        let m = MonomialModule::sym_tensor(&[], 3).unwrap();
        assert_eq!(m.dim(), 1);
        for (d, n, k) in [(2usize, 4usize, 2usize), (3, 2, 3), (0, 2, 2)] {
            let m = MonomialModule::sym_of_tensor(d, n, k).unwrap();
            assert_eq!(BigUint::from(m.dim()), binomial((n * k + d - 1) as u64, d as u64));
        }
    }

    #[test]
    fn basis_is_strictly_decreasing() {
        let m = MonomialModule::sym_tensor(&[2, 2], 3).unwrap();
        assert!(m.basis().windows(2).all(|w| w[0] > w[1]));
        for (i, mono) in m.basis().iter().enumerate() {
            assert_eq!(m.index_of(mono), Some(i));
            assert_eq!(m.row_degrees(mono), vec![2, 2]);
        }
    }

    #[test]
    fn weights() {
        let m = MonomialModule::sym_of_tensor(3, 2, 2).unwrap();
        // x[0][0]^2 x[1][1]
        let mono = Monomial(vec![2, 0, 0, 1]);
        assert_eq!(m.column_weights(&mono), vec![2, 1]);
        assert_eq!(m.row_degrees(&mono), vec![2, 1]);
        assert_eq!(m.transverse_degrees(&mono, Axis::Rows), vec![2, 1]);
    }

    #[test]
    fn embedding_pads_columns() {
        let f = Rationals;
        let a = MonomialModule::sym_tensor(&[2], 1).unwrap();
        let b = MonomialModule::sym_tensor(&[2], 2).unwrap();
        let v = SparseVector::unit(&f, 0);
        let w = a.embed_vector(&f, &b, &v).unwrap();
        assert_eq!(b.monomial(w.entries()[0].0).0, vec![2, 0]);
        assert!(b.embed_vector(&f, &a, &SparseVector::unit(&f, 0)).is_err());
    }

    #[test]
    fn substitution_binomial_expansion() {
        // x0 -> x0 + t x1 applied to x0^2 in Sym^2(K^2)
        let f = PrimeField::new(2).unwrap();
        let m = MonomialModule::sym_tensor(&[2], 2).unwrap();
        let s = AxisSubstitution::from_integer(
            &f,
            Axis::Cols,
            &[vec![vec![(0, 1)], vec![(1, 1)]], vec![vec![], vec![(0, 1)]]],
        );
        let out = s.apply(&f, &m, &SparseVector::unit(&f, 0)).unwrap();
        // t^0: x0^2, t^1: 2 x0 x1 = 0, t^2: x1^2
        assert_eq!(out.len(), 2);
        assert_eq!(m.monomial(out[&2].entries()[0].0).0, vec![0, 2]);
        let q = Rationals;
        let s = AxisSubstitution::from_integer(
            &q,
            Axis::Cols,
            &[vec![vec![(0, 1)], vec![(1, 1)]], vec![vec![], vec![(0, 1)]]],
        );
        let out = s.apply(&q, &m, &SparseVector::unit(&q, 0)).unwrap();
        assert_eq!(out.len(), 3);
        assert_eq!(out[&1].entries()[0].1, q.from_i64(2));
    }

    #[test]
    fn determinant_of_generic_matrix() {
        let f = Rationals;
        let nv = 4;
        let x = |i| Poly::variable(&f, nv, i);
        let det = poly_det(&f, nv, &[vec![x(0), x(1)], vec![x(2), x(3)]]);
        assert_eq!(det.terms().len(), 2);
        assert_eq!(det.terms()[&Monomial(vec![1, 0, 0, 1])], f.one());
        assert_eq!(det.terms()[&Monomial(vec![0, 1, 1, 0])], f.from_i64(-1));
    }

    #[test]
    fn formatting() {
        let f = Rationals;
        let name = |v: usize| alloc::format!("v{v}");
        let x = |i| Poly::variable(&f, 3, i);
        let p = x(0).mul(&f, &x(0)).add(&f, &x(1).scale(&f, &f.from_i64(-3))).add(&f, &Poly::constant(&f, 3, f.from_i64(-1)));
        assert_eq!(format_poly(&f, &p, &name), "v0^2 - 3*v1 - 1");
        assert_eq!(format_poly(&f, &x(2).scale(&f, &f.from_i64(-1)), &name), "-v2");
        assert_eq!(format_poly(&f, &Poly::zero(), &name), "0");
    }
}
