//! Classical generating families and the subalgebra they span degree by degree.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use serde::{Serialize, Serializer};

use super::{ambient_module, product_span, ActionKind, ActionSpec, InvariantTower};
use crate::field::Field;
use crate::linalg::Subspace;
use crate::poly::{poly_det, Poly};
use crate::{with_field, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorFamily {
    /// Coefficients of characteristic polynomials of words in generic matrices.
    CharPolyTraces,
    /// `det(Σ_i T_i ⊗ X_i)` for `{0,1}`-matrices `T_i`.
    Determinantal,
    /// `[v_i v_j]`, the `2 × 2` determinants of pairs of vectors.
    Pluecker,
}

impl GeneratorFamily {
    fn compatible(&self, kind: ActionKind) -> bool {
        matches!(
            (self, kind),
            (GeneratorFamily::CharPolyTraces, ActionKind::GlConjugation(_))
                | (GeneratorFamily::Determinantal, ActionKind::SlslLeftRight(_))
                | (GeneratorFamily::Pluecker, ActionKind::Sl2Vector)
        )
    }
}

impl fmt::Display for GeneratorFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GeneratorFamily::CharPolyTraces => "char_poly_traces",
            GeneratorFamily::Determinantal => "determinantal",
            GeneratorFamily::Pluecker => "pluecker",
        })
    }
}

impl FromStr for GeneratorFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().replace('-', "_").as_str() {
            "char_poly_traces" | "traces" => Ok(GeneratorFamily::CharPolyTraces),
            "determinantal" | "det" => Ok(GeneratorFamily::Determinantal),
            "pluecker" | "plucker" => Ok(GeneratorFamily::Pluecker),
            _ => Err(Error::InvalidInput(format!(
                "unknown generator family {s:?}; expected char_poly_traces, determinantal or pluecker"
            ))),
        }
    }
}

impl Serialize for GeneratorFamily {
    fn serialize<S: Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

type PolyMatrix<E> = Vec<Vec<Poly<E>>>;

/// The `k`-th generic matrix, with entry `(p, q)` the coordinate `p·n + q` of copy `k`.
fn generic_matrix<F: Field>(field: &F, n: usize, m: usize, k: usize) -> PolyMatrix<F::Elem> {
    (0..n)
        .map(|p| (0..n).map(|q| Poly::variable(field, n * n * m, (p * n + q) * m + k)).collect())
        .collect()
}

fn mat_mul<F: Field>(field: &F, a: &PolyMatrix<F::Elem>, b: &PolyMatrix<F::Elem>) -> PolyMatrix<F::Elem> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(Poly::zero(), |acc, l| acc.add(field, &a[i][l].mul(field, &b[l][j]))))
                .collect()
        })
        .collect()
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|mask| mask.count_ones() as usize == k)
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
        .collect()
}

/// Words of length `len` over `0..m` that are lexicographically smallest
/// among their rotations; `c_k` is invariant under rotating the word.
fn necklaces(m: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let total = m.pow(len as u32);
    for mut code in 0..total {
        let mut w = alloc::vec![0; len];
        for slot in w.iter_mut().rev() {
            *slot = code % m;
            code /= m;
        }
        if (1..len).all(|r| {
            let rot: Vec<usize> = w[r..].iter().chain(&w[..r]).copied().collect();
            w <= rot
        }) {
            out.push(w);
        }
    }
    out
}

fn char_poly_traces<F: Field>(field: &F, n: usize, m: usize, d: usize) -> BTreeMap<usize, Vec<Poly<F::Elem>>> {
    let nvars = n * n * m;
    let xs: Vec<_> = (0..m).map(|k| generic_matrix(field, n, m, k)).collect();
    let mut gens: BTreeMap<usize, Vec<Poly<F::Elem>>> = BTreeMap::new();
    for len in 1..=d {
        for word in necklaces(m, len) {
            let prod = word[1..].iter().fold(xs[word[0]].clone(), |acc, &k| mat_mul(field, &acc, &xs[k]));
            for k in (1..=n).filter(|k| k * len <= d) {
                let mut c = Poly::zero();
                for s in k_subsets(n, k) {
                    let minor: PolyMatrix<F::Elem> =
                        s.iter().map(|&i| s.iter().map(|&j| prod[i][j].clone()).collect()).collect();
                    c = c.add(field, &poly_det(field, nvars, &minor));
                }
                if !c.is_zero() {
                    gens.entry(k * len).or_default().push(c);
                }
            }
        }
    }
    gens
}

fn determinantal<F: Field>(field: &F, n: usize, m: usize, d: usize) -> BTreeMap<usize, Vec<Poly<F::Elem>>> {
    let nvars = n * n * m;
    let xs: Vec<_> = (0..m).map(|k| generic_matrix(field, n, m, k)).collect();
    let mut gens: BTreeMap<usize, Vec<Poly<F::Elem>>> = BTreeMap::new();
    for k in (1..).take_while(|k| k * n <= d) {
        let bits = k * k * m;
        for mask in 1u64..1 << bits {
            let t = |i: usize, r: usize, s: usize| mask >> (i * k * k + r * k + s) & 1 == 1;
            let big: PolyMatrix<F::Elem> = (0..k * n)
                .map(|row| {
                    (0..k * n)
                        .map(|col| {
                            let (r, p, s, q) = (row / n, row % n, col / n, col % n);
                            (0..m)
                                .filter(|&i| t(i, r, s))
                                .fold(Poly::zero(), |acc, i| acc.add(field, &xs[i][p][q]))
                        })
                        .collect()
                })
                .collect();
            let det = poly_det(field, nvars, &big);
            if !det.is_zero() {
                gens.entry(k * n).or_default().push(det);
            }
        }
    }
    gens
}

fn pluecker<F: Field>(field: &F, m: usize) -> BTreeMap<usize, Vec<Poly<F::Elem>>> {
    let nvars = 2 * m;
    let x = |row: usize, col: usize| Poly::variable(field, nvars, row * m + col);
    let minus = field.neg(&field.one());
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let a = x(0, i).mul(field, &x(1, j));
            let b = x(1, i).mul(field, &x(0, j)).scale(field, &minus);
            out.push(a.add(field, &b));
        }
    }
    let mut gens = BTreeMap::new();
    if !out.is_empty() {
        gens.insert(2, out);
    }
    gens
}

/// Raw generators of degree `≤ d`, keyed by degree.
pub fn generator_polys<F: Field>(
    action: &ActionSpec,
    family: GeneratorFamily,
    d: usize,
    field: &F,
) -> Result<BTreeMap<usize, Vec<Poly<F::Elem>>>> {
    if !family.compatible(action.kind) {
        return Err(Error::InvalidInput(format!("family {family} does not apply to {}", action.kind)));
    }
    let m = action.copies;
    Ok(match action.kind {
        ActionKind::GlConjugation(n) => char_poly_traces(field, n, m, d),
        ActionKind::SlslLeftRight(n) => determinantal(field, n, m, d),
        _ => pluecker(field, m),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorReport {
    pub action: ActionSpec,
    pub family: GeneratorFamily,
    pub d: usize,
    /// Linearly independent generators kept, per degree `0..=d`.
    pub generators: Vec<usize>,
    pub span_dim: usize,
    pub invariant_dim: usize,
    /// Every generator and the whole span lie in the invariant space.
    pub contained: bool,
    pub equal: bool,
}

fn generator_span_in<F: Field>(action: &ActionSpec, family: GeneratorFamily, d: usize, field: &F) -> Result<GeneratorReport> {
    let raw = generator_polys(action, family, d, field)?;
    let tower = InvariantTower::new(action, d, field)?;
    let mut contained = true;
    let mut kept: Vec<Vec<Poly<F::Elem>>> = alloc::vec![Vec::new(); d + 1];
    for (e, polys) in raw {
        let piece = &tower.pieces[e];
        let mut span = Subspace::zero(field.clone(), piece.module.dim());
        for p in polys {
            if span.dim() >= piece.space.dim() && contained {
                break;
            }
            let v = piece.module.vector_from_poly(field, &p)?;
            if span.insert(v.clone())? {
                contained &= piece.space.contains_vector(&v)?;
                kept[e].push(p);
            }
        }
    }
    // A_e = Σ_{j ≥ 1} A_{e-j} · gens_j, with A_0 = K
    let mut algebra: Vec<Vec<Poly<F::Elem>>> =
        alloc::vec![alloc::vec![Poly::constant(field, action.dim_v() * action.copies, field.one())]];
    let mut last = Subspace::full(field.clone(), 1);
    for e in 1..=d {
        let module = ambient_module(action, e)?;
        let mut span = Subspace::zero(field.clone(), module.dim());
        for j in 1..=e {
            product_span(field, &module, &algebra[e - j], &kept[j], &mut span, module.dim())?;
        }
        algebra.push(span.basis().iter().map(|v| module.poly_from_vector(field, v)).collect());
        last = span;
    }
    let target = &tower.pieces[d].space;
    contained &= target.contains(&last)?;
    Ok(GeneratorReport {
        action: *action,
        family,
        d,
        generators: kept.iter().map(Vec::len).collect(),
        span_dim: last.dim(),
        invariant_dim: target.dim(),
        contained,
        equal: &last == target,
    })
}

/// Degree-`d` part of the subalgebra generated by `family`, compared with
/// `K[V^m]^G_d`.
pub fn generator_span(action: &ActionSpec, family: GeneratorFamily, d: usize) -> Result<GeneratorReport> {
    with_field!(action.field, f => generator_span_in(action, family, d, &f))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn necklace_counts() {
        // binary necklaces: 2, 3, 4, 6 for lengths 1..4
        let counts: Vec<usize> = (1..=4).map(|l| necklaces(2, l).len()).collect();
        assert_eq!(counts, [2, 3, 4, 6]);
        assert_eq!(necklaces(3, 2).len(), 6);
    }

    #[test]
    fn family_parsing() {
        assert_eq!("char_poly_traces".parse::<GeneratorFamily>().unwrap(), GeneratorFamily::CharPolyTraces);
        assert_eq!("pluecker".parse::<GeneratorFamily>().unwrap(), GeneratorFamily::Pluecker);
        assert!("other".parse::<GeneratorFamily>().is_err());
    }
}
