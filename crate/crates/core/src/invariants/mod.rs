//! Graded invariant spaces `K[V^m]^G_d` for concrete actions.
//!
//! A degree-`d` polynomial on `V^m` lives in `Sym^d(V* ⊗ K^m)`, stored as a
//! [`MonomialModule`] whose rows are the coordinates of `V` and whose columns
//! are the copies. `G` acts on rows, `GL_m` on columns.
//!
//! For a connected group the invariants are the polynomials of torus weight
//! zero that are fixed by every root subgroup `u(t)` with `t` a formal
//! parameter: `f(u(t)·X) − f(X)` must vanish coefficient by coefficient in
//! `t`. This is the same argument as for [`gl_closure`](crate::polarization::gl_closure)
//! and gives invariance under `G` over the algebraic closure. For the finite
//! cyclic group the single generator is substituted directly.

mod action;
mod checks;
mod generators;

pub use action::{coordinate_name, ActionData, ActionKind, ActionSpec, IntegerSubstitution};
pub use checks::*;
pub use generators::{generator_polys, generator_span, GeneratorFamily, GeneratorReport};

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use serde::Serialize;

use crate::field::Field;
use crate::linalg::{kernel, SparseVector, Subspace};
use crate::poly::{format_poly, Axis, AxisSubstitution, MonomialModule, Poly};
use crate::{with_field, Error, Result};

/// The invariants of `module` when `G` acts on the coordinates along `axis`.
pub fn invariants_in_module<F: Field>(
    field: &F,
    module: &MonomialModule,
    axis: Axis,
    data: &ActionData,
) -> Result<Subspace<F>> {
    let coords = match axis {
        Axis::Rows => module.rows(),
        Axis::Cols => module.cols(),
    };
    if coords != data.dim_v {
        return Err(Error::DimensionMismatch { expected: data.dim_v, got: coords });
    }
    let coord_of = |var: usize| match axis {
        Axis::Rows => var / module.cols(),
        Axis::Cols => var % module.cols(),
    };
    let width = data.charges.first().map_or(0, Vec::len);
    let subs: Vec<AxisSubstitution<F::Elem>> =
        data.substitutions.iter().map(|s| AxisSubstitution::from_integer(field, axis, s)).collect();

    // substitutions along `axis` preserve the transverse degrees, so each
    // bucket is solved on its own
    let mut buckets: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (i, mono) in module.basis().iter().enumerate() {
        let mut charge = alloc::vec![0i64; width];
        for (var, &e) in mono.0.iter().enumerate() {
            if e > 0 {
                for (acc, c) in charge.iter_mut().zip(&data.charges[coord_of(var)]) {
                    *acc += i64::from(e) * c;
                }
            }
        }
        if charge.iter().all(|&c| c == 0) {
            buckets.entry(module.transverse_degrees(mono, axis)).or_default().push(i);
        }
    }

    let mut out = Subspace::zero(field.clone(), module.dim());
    for unknowns in buckets.values() {
        let mut eqs: BTreeMap<(usize, u32, usize), Vec<(usize, F::Elem)>> = BTreeMap::new();
        for (local, &i) in unknowns.iter().enumerate() {
            for (g, sub) in subs.iter().enumerate() {
                eqs.entry((g, 0, i)).or_default().push((local, field.neg(&field.one())));
                for ((k, mono), c) in sub.apply_monomial(field, module, module.monomial(i))? {
                    let j = module
                        .index_of(&mono)
                        .ok_or_else(|| Error::InvalidInput(format!("action leaves the module at {:?}", mono.0)))?;
                    eqs.entry((g, k, j)).or_default().push((local, c));
                }
            }
        }
        let solutions = kernel(
            field.clone(),
            unknowns.len(),
            eqs.into_values().map(|pairs| SparseVector::from_pairs(field, pairs)),
        )?;
        for v in solutions.basis() {
            let pairs = v.entries().iter().map(|(l, c)| (unknowns[*l], c.clone())).collect();
            out.insert(SparseVector::from_pairs(field, pairs))?;
        }
    }
    Ok(out)
}

/// One graded piece: a subspace of `Sym^d(V* ⊗ K^m)`.
#[derive(Debug, Clone)]
pub struct GradedPiece<F: Field> {
    pub d: usize,
    pub module: MonomialModule,
    pub space: Subspace<F>,
}

impl<F: Field> GradedPiece<F> {
    pub fn polys(&self) -> Vec<Poly<F::Elem>> {
        let field = self.space.field();
        self.space.basis().iter().map(|v| self.module.poly_from_vector(field, v)).collect()
    }
}

fn check_field<F: Field>(action: &ActionSpec, field: &F) -> Result<()> {
    if action.field != field.spec() {
        return Err(Error::FieldMismatch(format!("{}", action.field), format!("{}", field.spec())));
    }
    Ok(())
}

/// `Sym^d(V* ⊗ K^m)` for the action.
pub fn ambient_module(action: &ActionSpec, d: usize) -> Result<MonomialModule> {
    MonomialModule::sym_of_tensor(d, action.dim_v(), action.copies)
}

/// `K[V^m]^G_d`.
pub fn invariant_space<F: Field>(action: &ActionSpec, d: usize, field: &F) -> Result<GradedPiece<F>> {
    check_field(action, field)?;
    let module = ambient_module(action, d)?;
    let space = invariants_in_module(field, &module, Axis::Rows, &action.kind.data())?;
    Ok(GradedPiece { d, module, space })
}

/// Span of the products `p·q`, `p ∈ left`, `q ∈ right`, inside `module`;
/// stops early once `cap` dimensions are reached.
pub(crate) fn product_span<F: Field>(
    field: &F,
    module: &MonomialModule,
    left: &[Poly<F::Elem>],
    right: &[Poly<F::Elem>],
    out: &mut Subspace<F>,
    cap: usize,
) -> Result<()> {
    for a in left {
        for b in right {
            if out.dim() >= cap {
                return Ok(());
            }
            out.insert(module.vector_from_poly(field, &a.mul(field, b))?)?;
        }
    }
    Ok(())
}

/// Invariant pieces of degrees `0..=d_max`, with decomposables.
#[derive(Debug, Clone)]
pub struct InvariantTower<F: Field> {
    pub action: ActionSpec,
    pub pieces: Vec<GradedPiece<F>>,
    polys: Vec<Vec<Poly<F::Elem>>>,
}

impl<F: Field> InvariantTower<F> {
    pub fn new(action: &ActionSpec, d_max: usize, field: &F) -> Result<Self> {
        let mut pieces = Vec::with_capacity(d_max + 1);
        let mut polys = Vec::with_capacity(d_max + 1);
        for d in 0..=d_max {
            let piece = invariant_space(action, d, field)?;
            polys.push(piece.polys());
            pieces.push(piece);
        }
        Ok(InvariantTower { action: *action, pieces, polys })
    }

    pub fn dims(&self) -> Vec<usize> {
        self.pieces.iter().map(|p| p.space.dim()).collect()
    }

    /// `Σ_{0<i<d} I_i · I_{d-i}`.
    pub fn decomposables(&self, d: usize) -> Result<Subspace<F>> {
        if d < 2 {
            return Err(Error::InvalidInput(format!("degree {d} has no factorization into positive degrees")));
        }
        let piece = self
            .pieces
            .get(d)
            .ok_or_else(|| Error::IndexOutOfRange(format!("degree {d} beyond the computed range")))?;
        let field = piece.space.field();
        let mut out = Subspace::zero(field.clone(), piece.module.dim());
        for i in 1..=d / 2 {
            product_span(field, &piece.module, &self.polys[i], &self.polys[d - i], &mut out, piece.space.dim())?;
        }
        Ok(out)
    }
}

/// Decomposable invariants of degree `d`: products of positive-degree invariants.
pub fn decomposable_subspace<F: Field>(action: &ActionSpec, d: usize, field: &F) -> Result<Subspace<F>> {
    if d < 2 {
        return Err(Error::InvalidInput(format!("degree {d} has no factorization into positive degrees")));
    }
    InvariantTower::new(action, d, field)?.decomposables(d)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub action: ActionSpec,
    pub d: usize,
    pub ambient_dim: usize,
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposable_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub indecomposable_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
}

pub fn format_piece<F: Field>(action: &ActionSpec, piece: &GradedPiece<F>) -> Vec<String> {
    let m = piece.module.cols();
    let name = |v: usize| coordinate_name(action.kind, v / m, v % m);
    piece.polys().iter().map(|p| format_poly(piece.space.field(), p, &name)).collect()
}

/// `K[V^m]^G_d` with its decomposable part (for `d ≥ 2`) and optionally a basis.
pub fn invariant_report(action: &ActionSpec, d: usize, with_basis: bool) -> Result<InvariantReport> {
    with_field!(action.field, f => {
        let tower = InvariantTower::new(action, d, &f)?;
        let piece = &tower.pieces[d];
        let dec = if d >= 2 { Some(tower.decomposables(d)?.dim()) } else { None };
        Ok(InvariantReport {
            action: *action,
            d,
            ambient_dim: piece.module.dim(),
            dim: piece.space.dim(),
            decomposable_dim: dec,
            indecomposable_dim: dec.map(|x| piece.space.dim() - x),
            basis: with_basis.then(|| format_piece(action, piece)),
        })
    })
}
