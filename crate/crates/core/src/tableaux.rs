//! Semistandard tableaux, Littlewood–Richardson coefficients and the Cauchy
//! dimension identity.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::partitions::{binomial, enumerate_partitions, schur_dimension, Partition};
use crate::{Error, Result};

/// A filling of a Young diagram; `rows[i][j]` is the entry in row `i`, column `j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Tableau {
    pub shape: Partition,
    pub rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Rows weakly increase, columns strictly increase, entries lie in `1..=m`.
    pub fn is_semistandard(&self, m: usize) -> bool {
        let fits = self.rows.len() == self.shape.length()
            && self.rows.iter().zip(self.shape.parts()).all(|(r, &p)| r.len() == p);
        fits && self.rows.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, &v)| {
                (1..=m).contains(&v)
                    && row.get(j + 1).is_none_or(|&r| v <= r)
                    && self.rows.get(i + 1).and_then(|b| b.get(j)).is_none_or(|&b| v < b)
            })
        })
    }

    /// Entries read row by row.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }
}

/// All semistandard tableaux of shape `λ` with entries at most `m`, in
/// lexicographic order of their row reading words.
pub fn ssyt_enumerate(lambda: &Partition, m: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    if lambda.length() > m {
        return out;
    }
    let cells: Vec<(usize, usize)> = lambda.cells().collect();
    let mut rows: Vec<Vec<usize>> = lambda.parts().iter().map(|&p| alloc::vec![0; p]).collect();
    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        m: usize,
        rows: &mut Vec<Vec<usize>>,
        shape: &Partition,
        out: &mut Vec<Tableau>,
    ) {
        if k == cells.len() {
            out.push(Tableau { shape: shape.clone(), rows: rows.clone() });
            return;
        }
        let (i, j) = cells[k];
        let lo_left = if j > 0 { rows[i][j - 1] } else { 1 };
        let lo_above = if i > 0 { rows[i - 1][j] + 1 } else { 1 };
        // the rest of the column still needs room below
        let below = shape.parts().iter().skip(i + 1).take_while(|&&p| p > j).count();
        let hi = m.saturating_sub(below);
        for v in lo_left.max(lo_above)..=hi {
            rows[i][j] = v;
            rec(k + 1, cells, m, rows, shape, out);
        }
        rows[i][j] = 0;
    }
    rec(0, &cells, m, &mut rows, lambda, &mut out);
    out
}

/// `c^ν_{λμ}`: the number of skew tableaux of shape `ν/λ` and content `μ`
/// whose reverse reading word is a lattice word.
pub fn lr_coefficient(nu: &Partition, lambda: &Partition, mu: &Partition) -> Result<u64> {
    if nu.size() != lambda.size() + mu.size() {
        return Err(Error::SizeMismatch {
            left: alloc::format!("{nu}"),
            left_size: nu.size(),
            right: alloc::format!("{lambda} + {mu}"),
            right_size: lambda.size() + mu.size(),
        });
    }
    if !nu.contains(lambda) || !nu.contains(mu) {
        return Ok(0);
    }
    // skew cells in reverse reading order: top row first, right to left
    let cells: Vec<(usize, usize)> = (0..nu.length())
        .flat_map(|i| (lambda.part(i)..nu.part(i)).rev().map(move |j| (i, j)))
        .collect();
    let mut fill: Vec<Vec<usize>> = nu.parts().iter().map(|&p| alloc::vec![0; p]).collect();
    let mut counts = alloc::vec![0usize; mu.length() + 1];
    let mut total = 0u64;
    lr_rec(0, &cells, lambda, mu, &mut fill, &mut counts, &mut total);
    Ok(total)
}

fn lr_rec(
    k: usize,
    cells: &[(usize, usize)],
    lambda: &Partition,
    mu: &Partition,
    fill: &mut Vec<Vec<usize>>,
    counts: &mut Vec<usize>,
    total: &mut u64,
) {
    if k == cells.len() {
        *total += 1;
        return;
    }
    let (i, j) = cells[k];
    // the entry to the right (already placed) bounds this one from above
    let hi_right = fill[i].get(j + 1).copied().filter(|&v| v > 0).unwrap_or(usize::MAX);
    let lo_above = if i > 0 && j >= lambda.part(i - 1) { fill[i - 1][j] + 1 } else { 1 };
    for v in lo_above..=mu.length().min(hi_right) {
        if counts[v] == mu.part(v - 1) {
            continue;
        }
        if v > 1 && counts[v] + 1 > counts[v - 1] {
            continue;
        }
        counts[v] += 1;
        fill[i][j] = v;
        lr_rec(k + 1, cells, lambda, mu, fill, counts, total);
        fill[i][j] = 0;
        counts[v] -= 1;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LrTerm {
    pub nu: Partition,
    pub multiplicity: u64,
}

/// The partitions `ν` with `l(ν) ≤ max_len` occurring in `S_λ ⊗ S_μ`, with
/// multiplicities `c^ν_{λμ}`, lexicographically largest first.
pub fn lr_expand_product(lambda: &Partition, mu: &Partition, max_len: usize) -> Vec<LrTerm> {
    enumerate_partitions(lambda.size() + mu.size(), max_len)
        .into_iter()
        .filter(|nu| nu.contains(lambda) && nu.contains(mu))
        .filter_map(|nu| {
            let c = lr_coefficient(&nu, lambda, mu).expect("sizes agree by construction");
            (c > 0).then_some(LrTerm { nu, multiplicity: c })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CauchyTerm {
    pub lambda: Partition,
    #[serde(serialize_with = "crate::serde_big::biguint")]
    pub dim_n: BigUint,
    #[serde(serialize_with = "crate::serde_big::biguint")]
    pub dim_m: BigUint,
    #[serde(serialize_with = "crate::serde_big::biguint")]
    pub product: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CauchyReport {
    pub n: usize,
    pub m: usize,
    pub d: usize,
    /// `C(nm + d - 1, d)`, the number of degree-`d` monomials in `nm` variables.
    #[serde(serialize_with = "crate::serde_big::biguint")]
    pub lhs: BigUint,
    #[serde(serialize_with = "crate::serde_big::biguint")]
    pub rhs: BigUint,
    pub terms: Vec<CauchyTerm>,
    pub holds: bool,
}

/// Checks `dim Sym^d(K^n ⊗ K^m) = Σ_{λ ⊢ d, l(λ) ≤ min(n,m)} dim S_λ(K^n) · dim S_λ(K^m)`.
pub fn cauchy_check(n: usize, m: usize, d: usize) -> Result<CauchyReport> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidInput(alloc::format!("n = {n} and m = {m} must be positive")));
    }
    let lhs = binomial((n * m + d - 1) as u64, d as u64);
    let terms: Vec<CauchyTerm> = enumerate_partitions(d, n.min(m))
        .into_iter()
        .map(|lambda| {
            let dim_n = schur_dimension(&lambda, n);
            let dim_m = schur_dimension(&lambda, m);
            let product = &dim_n * &dim_m;
            CauchyTerm { lambda, dim_n, dim_m, product }
        })
        .collect();
    let rhs = terms.iter().fold(BigUint::zero(), |acc, t| acc + &t.product);
    Ok(CauchyReport { n, m, d, holds: lhs == rhs, lhs, rhs, terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use num_traits::ToPrimitive;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn ssyt_examples() {
        assert_eq!(ssyt_enumerate(&p(&[1]), 3).len(), 3);
        assert!(ssyt_enumerate(&p(&[1, 1, 1]), 2).is_empty());
        let t = ssyt_enumerate(&p(&[2, 1]), 2);
        assert_eq!(t.len(), 2);
        assert_eq!(t[0].rows, vec![vec![1, 1], vec![2]]);
        assert_eq!(t[1].rows, vec![vec![1, 2], vec![2]]);
        assert_eq!(ssyt_enumerate(&Partition::empty(), 0).len(), 1);
    }

    #[test]
    fn ssyt_order_and_validity() {
        let ts = ssyt_enumerate(&p(&[3, 2, 1]), 4);
        assert!(ts.iter().all(|t| t.is_semistandard(4)));
        assert!(ts.windows(2).all(|w| w[0].reading_word() < w[1].reading_word()));
    }

    #[test]
    fn ssyt_count_matches_hook_content() {
        for d in 0..=8 {
            for l in enumerate_partitions(d, d) {
                for m in 0..=5 {
                    let c = ssyt_enumerate(&l, m).len();
                    assert_eq!(schur_dimension(&l, m).to_usize().unwrap(), c, "{l} m={m}");
                }
            }
        }
    }

    #[test]
    fn lr_examples() {
        let (l, m) = (p(&[3, 1]), p(&[2, 2]));
        assert_eq!(lr_coefficient(&(&l + &m), &l, &m).unwrap(), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &Partition::empty()).unwrap(), 1);
        assert_eq!(lr_coefficient(&p(&[3]), &p(&[2, 1]), &Partition::empty()).unwrap(), 0);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[2])).unwrap(), 1);
        assert_eq!(lr_coefficient(&p(&[3]), &p(&[1]), &p(&[2])).unwrap(), 1);
        assert_eq!(lr_coefficient(&p(&[1, 1, 1]), &p(&[1]), &p(&[2])).unwrap(), 0);
        // the smallest coefficient equal to two
        assert_eq!(lr_coefficient(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])).unwrap(), 2);
        assert!(lr_coefficient(&p(&[3]), &p(&[1]), &p(&[1])).is_err());
    }

    #[test]
    fn lr_dimension_bookkeeping_m3() {
        // 3 * 6 = 10 + 8 for S_(1) ⊗ S_(2) on K^3
        let terms = lr_expand_product(&p(&[1]), &p(&[2]), 3);
        let total: u64 = terms
            .iter()
            .map(|t| t.multiplicity * schur_dimension(&t.nu, 3).to_u64().unwrap())
            .sum();
        assert_eq!(total, 18);
    }

    #[test]
    fn lr_expand_examples() {
        let t = lr_expand_product(&p(&[1]), &p(&[1]), 2);
        assert_eq!(
            t,
            vec![LrTerm { nu: p(&[2]), multiplicity: 1 }, LrTerm { nu: p(&[1, 1]), multiplicity: 1 }]
        );
        assert_eq!(
            lr_expand_product(&p(&[2, 2]), &Partition::empty(), 4),
            vec![LrTerm { nu: p(&[2, 2]), multiplicity: 1 }]
        );
        assert_eq!(lr_expand_product(&p(&[1]), &p(&[1]), 1), vec![LrTerm { nu: p(&[2]), multiplicity: 1 }]);
    }

    #[test]
    fn lr_structure_on_small_range() {
        for a in 0..=4 {
            for b in 0..=4 {
                for l in enumerate_partitions(a, a) {
                    for m in enumerate_partitions(b, b) {
                        let top = &l + &m;
                        let terms = lr_expand_product(&l, &m, a + b);
                        assert_eq!(terms[0], LrTerm { nu: top.clone(), multiplicity: 1 });
                        for t in &terms[1..] {
                            assert!(t.nu.dominance_leq(&top).unwrap() && t.nu != top);
                            assert_eq!(lr_coefficient(&t.nu, &m, &l).unwrap(), t.multiplicity);
                        }
                        for dim in 1..=3 {
                            let lhs = schur_dimension(&l, dim) * schur_dimension(&m, dim);
                            let rhs: BigUint = lr_expand_product(&l, &m, dim)
                                .iter()
                                .map(|t| schur_dimension(&t.nu, dim) * BigUint::from(t.multiplicity))
                                .sum();
                            assert_eq!(lhs, rhs, "{l} {m} m={dim}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn cauchy_examples() {
        let r = cauchy_check(2, 2, 2).unwrap();
        assert_eq!(r.lhs, BigUint::from(10u32));
        assert!(r.holds);
        assert_eq!(r.terms.len(), 2);
        assert_eq!(r.terms[0].product, BigUint::from(9u32));
        assert_eq!(r.terms[1].product, BigUint::from(1u32));
        let r = cauchy_check(3, 2, 0).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (BigUint::from(1u32), BigUint::from(1u32)));
        let r = cauchy_check(1, 3, 4).unwrap();
        assert_eq!(r.terms.len(), 1);
        assert_eq!(r.lhs, binomial(6, 4));
        assert!(cauchy_check(0, 1, 1).is_err());
    }
}
