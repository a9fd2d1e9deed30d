use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use serde::{Serialize, Serializer};

use crate::field::FieldSpec;
use crate::{Error, Result};

/// The group and representation `V`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ActionKind {
    /// `GL_n` on `n × n` matrices by conjugation.
    GlConjugation(usize),
    /// `SL_n × SL_n` on `n × n` matrices by `(A, B)·X = A X B⁻¹`.
    SlslLeftRight(usize),
    /// `SL_2` on `K^2`.
    Sl2Vector,
    /// `Z/p` on `K^2` through the unipotent Jordan block; needs `K = F_p`.
    CyclicUnipotent(u32),
}

impl ActionKind {
    pub fn dim_v(&self) -> usize {
        match *self {
            ActionKind::GlConjugation(n) | ActionKind::SlslLeftRight(n) => n * n,
            ActionKind::Sl2Vector | ActionKind::CyclicUnipotent(_) => 2,
        }
    }

    /// Connected groups; the finite cyclic group is the only exception.
    pub fn is_connected(&self) -> bool {
        !matches!(self, ActionKind::CyclicUnipotent(_))
    }

    /// Matrix size `n` for the matrix actions.
    pub fn matrix_size(&self) -> Option<usize> {
        match *self {
            ActionKind::GlConjugation(n) | ActionKind::SlslLeftRight(n) => Some(n),
            _ => None,
        }
    }
}

impl fmt::Display for ActionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ActionKind::GlConjugation(n) => write!(f, "conj:{n}"),
            ActionKind::SlslLeftRight(n) => write!(f, "slsl:{n}"),
            ActionKind::Sl2Vector => write!(f, "sl2vec"),
            ActionKind::CyclicUnipotent(p) => write!(f, "cyclic:{p}"),
        }
    }
}

impl FromStr for ActionKind {
    type Err = Error;

    /// `conj:<n>`, `slsl:<n>`, `sl2vec` or `cyclic:<p>`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("unknown action {s:?}; expected conj:<n>, slsl:<n>, sl2vec or cyclic:<p>"));
        let s = s.trim();
        if s == "sl2vec" {
            return Ok(ActionKind::Sl2Vector);
        }
        let (head, arg) = s.split_once(':').ok_or_else(bad)?;
        let n: u32 = arg.trim().parse().map_err(|_| bad())?;
        let kind = match head.trim() {
            "conj" => ActionKind::GlConjugation(n as usize),
            "slsl" => ActionKind::SlslLeftRight(n as usize),
            "cyclic" => ActionKind::CyclicUnipotent(n),
            _ => return Err(bad()),
        };
        match kind {
            ActionKind::GlConjugation(0) | ActionKind::SlslLeftRight(0) => {
                Err(Error::InvalidInput(format!("matrix size must be positive in {s:?}")))
            }
            ActionKind::CyclicUnipotent(p) if !crate::field::is_prime(u64::from(p)) => Err(Error::NotPrime(u64::from(p))),
            k => Ok(k),
        }
    }
}

impl Serialize for ActionKind {
    fn serialize<S: Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `G` acting diagonally on `V^m` over `field`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ActionSpec {
    pub kind: ActionKind,
    pub copies: usize,
    pub field: FieldSpec,
}

impl ActionSpec {
    pub fn new(kind: ActionKind, copies: usize, field: FieldSpec) -> Result<Self> {
        if let ActionKind::CyclicUnipotent(p) = kind {
            if field != FieldSpec::Prime(p) {
                return Err(Error::FieldMismatch(format!("{kind}"), format!("{field}")));
            }
        }
        Ok(ActionSpec { kind, copies, field })
    }

    pub fn with_copies(&self, copies: usize) -> Self {
        ActionSpec { copies, ..*self }
    }

    pub fn with_field(&self, field: FieldSpec) -> Result<Self> {
        Self::new(self.kind, self.copies, field)
    }

    pub fn dim_v(&self) -> usize {
        self.kind.dim_v()
    }
}

/// `Z[t]`-matrix on the coordinate functions of `V`: the image of `x_c` is
/// `Σ_{c'} entry[c][c'](t) x_{c'}`.
pub type IntegerSubstitution = Vec<Vec<Vec<(u32, i64)>>>;

/// Concrete data for invariance: every invariant `f` satisfies
/// `f ∘ σ = f` identically in `t` for each substitution `σ`, and every
/// monomial of `f` has total charge zero.
#[derive(Debug, Clone)]
pub struct ActionData {
    pub dim_v: usize,
    pub substitutions: Vec<IntegerSubstitution>,
    /// Charge vector of each coordinate; the torus condition.
    pub charges: Vec<Vec<i64>>,
}

struct Builder {
    dim: usize,
    entries: BTreeMap<(usize, usize, u32), i64>,
}

impl Builder {
    fn identity(dim: usize) -> Self {
        let entries = (0..dim).map(|c| ((c, c, 0), 1)).collect();
        Builder { dim, entries }
    }

    fn add(&mut self, from: usize, to: usize, power: u32, c: i64) {
        *self.entries.entry((from, to, power)).or_insert(0) += c;
    }

    fn build(self) -> IntegerSubstitution {
        let mut m = alloc::vec![alloc::vec![Vec::new(); self.dim]; self.dim];
        for ((from, to, k), c) in self.entries {
            if c != 0 {
                m[from][to].push((k, c));
            }
        }
        m
    }
}

/// `δ_{i} − δ_{i+1}` for `i < n − 1`: vanishes exactly on constant vectors.
fn sl_charge(n: usize, i: usize) -> Vec<i64> {
    (0..n.saturating_sub(1))
        .map(|j| i64::from(j == i) - i64::from(j + 1 == i))
        .collect()
}

impl ActionKind {
    pub fn data(&self) -> ActionData {
        let dim_v = self.dim_v();
        let pairs = |n: usize| (0..n).flat_map(move |a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)));
        match *self {
            ActionKind::GlConjugation(n) => {
                // (I + tE_ab) X (I − tE_ab)
                let idx = |p: usize, q: usize| p * n + q;
                let substitutions = pairs(n)
                    .map(|(a, b)| {
                        let mut s = Builder::identity(dim_v);
                        for q in 0..n {
                            s.add(idx(a, q), idx(b, q), 1, 1);
                        }
                        for p in 0..n {
                            s.add(idx(p, b), idx(p, a), 1, -1);
                        }
                        s.add(idx(a, b), idx(b, a), 2, -1);
                        s.build()
                    })
                    .collect();
                let charges = (0..dim_v)
                    .map(|c| {
                        let (p, q) = (c / n, c % n);
                        (0..n).map(|i| i64::from(i == p) - i64::from(i == q)).collect()
                    })
                    .collect();
                ActionData { dim_v, substitutions, charges }
            }
            ActionKind::SlslLeftRight(n) => {
                let idx = |p: usize, q: usize| p * n + q;
                let mut substitutions = Vec::new();
                for (a, b) in pairs(n) {
                    // left factor (I + tE_ab) X
                    let mut s = Builder::identity(dim_v);
                    for q in 0..n {
                        s.add(idx(a, q), idx(b, q), 1, 1);
                    }
                    substitutions.push(s.build());
                    // right factor X (I − tE_ab)
                    let mut s = Builder::identity(dim_v);
                    for p in 0..n {
                        s.add(idx(p, b), idx(p, a), 1, -1);
                    }
                    substitutions.push(s.build());
                }
                let charges = (0..dim_v)
                    .map(|c| {
                        let mut v = sl_charge(n, c / n);
                        v.extend(sl_charge(n, c % n));
                        v
                    })
                    .collect();
                ActionData { dim_v, substitutions, charges }
            }
            ActionKind::Sl2Vector => {
                let substitutions = pairs(2)
                    .map(|(a, b)| {
                        let mut s = Builder::identity(2);
                        s.add(a, b, 1, 1);
                        s.build()
                    })
                    .collect();
                let charges = (0..2).map(|c| sl_charge(2, c)).collect();
                ActionData { dim_v, substitutions, charges }
            }
            ActionKind::CyclicUnipotent(_) => {
                // x_0 ↦ x_0 + x_1
                let mut s = Builder::identity(2);
                s.add(0, 1, 0, 1);
                ActionData { dim_v, substitutions: alloc::vec![s.build()], charges: alloc::vec![Vec::new(); 2] }
            }
        }
    }
}

/// Name of the coordinate function `c` of `V` in copy `copy`.
pub fn coordinate_name(kind: ActionKind, c: usize, copy: usize) -> String {
    match kind.matrix_size() {
        Some(n) => format!("x{}_{}{}", copy + 1, c / n + 1, c % n + 1),
        None => format!("{}{}", if c == 0 { "x" } else { "y" }, copy + 1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn parse_and_display() {
        for s in ["conj:2", "slsl:3", "sl2vec", "cyclic:2"] {
            assert_eq!(s.parse::<ActionKind>().unwrap().to_string(), s);
        }
        assert!("conj:0".parse::<ActionKind>().is_err());
        assert!("cyclic:4".parse::<ActionKind>().is_err());
        assert!("gl:2".parse::<ActionKind>().is_err());
        assert!("conj".parse::<ActionKind>().is_err());
    }

    #[test]
    fn cyclic_needs_matching_prime_field() {
        let k = ActionKind::CyclicUnipotent(2);
        assert!(ActionSpec::new(k, 2, FieldSpec::Prime(2)).is_ok());
        assert!(ActionSpec::new(k, 2, FieldSpec::Prime(3)).is_err());
        assert!(ActionSpec::new(k, 2, FieldSpec::Rationals).is_err());
    }

    #[test]
    fn conjugation_substitution_is_exact() {
        // (I + tE_12) X (I − tE_12) for X = [[a, b], [c, d]]:
        // [[a + tc, b + t(d − a) − t²c], [c, d − tc]]
        let data = ActionKind::GlConjugation(2).data();
        assert_eq!(data.substitutions.len(), 2);
        let s = &data.substitutions[0];
        assert_eq!(s[0][0], alloc::vec![(0, 1)]);
        assert_eq!(s[0][2], alloc::vec![(1, 1)]);
        assert_eq!(s[1][1], alloc::vec![(0, 1)]);
        assert_eq!(s[1][0], alloc::vec![(1, -1)]);
        assert_eq!(s[1][3], alloc::vec![(1, 1)]);
        assert_eq!(s[1][2], alloc::vec![(2, -1)]);
        assert_eq!(s[3][2], alloc::vec![(1, -1)]);
        assert!(s[2][0].is_empty() && s[2][3].is_empty());
        assert_eq!(data.charges[1], alloc::vec![1, -1]);
    }
}
