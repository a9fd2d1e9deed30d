//! Integer partitions and the characteristic-free numerology attached to them.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Add;
use core::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::field::is_prime;
use crate::{Error, Result};

/// A weakly decreasing sequence of positive integers. The empty partition is
/// allowed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates `parts`; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has an interior zero")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `λ_i` with zero beyond the length (0-based index).
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `l(λ)`.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let cols = (1..=width).map(|j| self.0.iter().take_while(|&&p| p >= j).count()).collect();
        Partition(cols)
    }

    /// Column lengths, i.e. the parts of the conjugate.
    pub fn columns(&self) -> Vec<usize> {
        self.conjugate().0
    }

    /// `λ + μ`, the row-wise sum.
    pub fn horizontal_concat(&self, other: &Partition) -> Partition {
        let len = self.length().max(other.length());
        Partition((0..len).map(|i| self.part(i) + other.part(i)).collect())
    }

    /// Prefix-sum dominance `λ ≼ μ` for partitions of the same size.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(self.size_mismatch(other));
        }
        let len = self.length().max(other.length());
        let (mut a, mut b) = (0, 0);
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether the Young diagram of `other` fits inside this one.
    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length() && other.0.iter().zip(&self.0).all(|(o, s)| o <= s)
    }

    fn size_mismatch(&self, other: &Partition) -> Error {
        Error::SizeMismatch {
            left: format!("{self}"),
            left_size: self.size(),
            right: format!("{other}"),
            right_size: other.size(),
        }
    }

    /// `(row, column)` coordinates of the boxes, row-major, 0-based.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
    }

    pub fn hook_length(&self, row: usize, col: usize) -> usize {
        let arm = self.part(row) - col - 1;
        let leg = self.0.iter().skip(row + 1).take_while(|&&p| p > col).count();
        arm + leg + 1
    }
}

impl Add for &Partition {
    type Output = Partition;
    fn add(self, rhs: &Partition) -> Partition {
        self.horizontal_concat(rhs)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `8,8,7,4`, `(8,8,7,4)` or `[8,8,7,4]`; the empty string and `()` give
    /// the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        if body.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = body
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::InvalidPartition(String::from(s))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Output of [`slice_decomposition`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SliceDecomposition {
    pub pieces: Vec<Partition>,
    pub n: usize,
    pub k: usize,
}

impl SliceDecomposition {
    /// Re-concatenation of the pieces.
    pub fn total(&self) -> Partition {
        self.pieces.iter().fold(Partition::empty(), |acc, p| &acc + p)
    }

    /// Verifies the decomposition of `lambda`: re-concatenation, the size
    /// windows, `l(μ_i) ≤ n` and the piece count bound `⌈|λ|/(n(k-1))⌉`.
    pub fn check(&self, lambda: &Partition) -> SliceCheck {
        let (n, k) = (self.n, self.k);
        let s = self.pieces.len();
        let windows = self.pieces.iter().enumerate().all(|(i, p)| {
            let size = p.size();
            size <= k * n && (i + 1 == s || size > n * (k - 1))
        });
        let lengths = self.pieces.iter().all(|p| p.length() <= n);
        let count_bound = if n == 0 { 0 } else { lambda.size().div_ceil(n * (k - 1)) };
        let reconcatenates = self.total() == *lambda;
        SliceCheck {
            reconcatenates,
            windows,
            lengths,
            count: s,
            count_bound,
            holds: reconcatenates && windows && lengths && s <= count_bound,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SliceCheck {
    pub reconcatenates: bool,
    /// `n(k-1) < |μ_i| ≤ kn` for every piece but the last, `|μ_s| ≤ kn`.
    pub windows: bool,
    pub lengths: bool,
    pub count: usize,
    pub count_bound: usize,
    pub holds: bool,
}

/// Writes `λ = μ_1 + … + μ_s` with `n(k-1) < |μ_i| ≤ kn` for `i < s`,
/// `|μ_s| ≤ kn` and `l(μ_i) ≤ n`, by greedily cutting prefixes of columns:
/// each piece takes the longest run of leading columns whose total stays
/// within `kn`. The empty partition has no pieces.
pub fn slice_decomposition(lambda: &Partition, n: usize, k: usize) -> Result<SliceDecomposition> {
    if k < 2 {
        return Err(Error::InvalidInput(format!("k = {k} must be at least 2")));
    }
    if lambda.length() > n {
        return Err(Error::InvalidInput(format!("l({lambda}) = {} exceeds n = {n}", lambda.length())));
    }
    let cap = k * n;
    let cols = lambda.columns();
    let mut pieces = Vec::new();
    let mut start = 0;
    while cols[start..].iter().sum::<usize>() > cap {
        let mut acc = 0;
        let mut end = start;
        // columns have length ≤ n < kn, so at least one column is taken
        while acc + cols[end] <= cap {
            acc += cols[end];
            end += 1;
        }
        pieces.push(Partition(cols[start..end].to_vec()).conjugate());
        start = end;
    }
    if start < cols.len() {
        pieces.push(Partition(cols[start..].to_vec()).conjugate());
    }
    Ok(SliceDecomposition { pieces, n, k })
}

/// All partitions of `d` with at most `max_len` parts, lexicographically
/// largest first.
pub fn enumerate_partitions(d: usize, max_len: usize) -> Vec<Partition> {
    fn rec(rest: usize, cap: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for first in (1..=cap.min(rest)).rev() {
            cur.push(first);
            rec(rest - first, first, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, d, max_len, &mut Vec::new(), &mut out);
    out
}

/// Digit sum of `d` in base `p`.
pub fn alpha_p(d: u64, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let (mut d, mut s) = (d, 0);
    while d > 0 {
        s += d % p;
        d /= p;
    }
    Ok(s)
}

/// `dim S_λ(K^m)` by the hook-content formula; zero when `l(λ) > m`.
pub fn schur_dimension(lambda: &Partition, m: usize) -> BigUint {
    if lambda.length() > m {
        return BigUint::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (i, j) in lambda.cells() {
        num *= BigInt::from(m + j - i);
        den *= BigInt::from(lambda.hook_length(i, j));
    }
    let q = num / den;
    q.to_biguint().expect("dimension is non-negative")
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}
