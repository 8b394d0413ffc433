//! Hyperline sequences.
//!
//! All values are kept in a canonical form so that structural equality is
//! equality of hyperline sequences: rank-2 atom sequences are rotated to
//! their lexicographically least shift, and rank `r > 2` sequences store
//! their hyperlines sorted, deduplicated and closed under `(Y|Z) -> (-Y|-Z)`.

mod check;
mod construct;

use std::collections::BTreeSet;

pub use check::{check_hyperline, check_hyperline_with};
pub use construct::{
    from_chirotope, from_chirotope_with, from_sign_map, minor_hls, to_chirotope, to_chirotope_with,
    Representative,
};

use crate::simplex::{normalize, CanonicalBasis, Normalized, SignedElement};

/// Rank 1: a choice of one signed copy per element of `E(X)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rank1 {
    ground: BTreeSet<u32>,
    chosen: BTreeSet<SignedElement>,
}

impl Rank1 {
    pub fn new(ground: BTreeSet<u32>, chosen: BTreeSet<SignedElement>) -> Self {
        Rank1 { ground, chosen }
    }

    /// Ground set taken to be the underlying elements of `chosen`.
    pub fn from_chosen(chosen: impl IntoIterator<Item = SignedElement>) -> Self {
        let chosen: BTreeSet<SignedElement> = chosen.into_iter().collect();
        let ground = chosen.iter().map(|x| x.element()).collect();
        Rank1 { ground, chosen }
    }

    pub fn ground(&self) -> &BTreeSet<u32> {
        &self.ground
    }

    pub fn chosen(&self) -> &BTreeSet<SignedElement> {
        &self.chosen
    }

    pub fn negated(&self) -> Rank1 {
        Rank1 {
            ground: self.ground.clone(),
            chosen: self.chosen.iter().map(|x| x.involute()).collect(),
        }
    }

    fn is_positive_base(&self, t: &[SignedElement]) -> bool {
        t.len() == 1 && self.chosen.contains(&t[0])
    }

    fn positive_tuples(&self) -> Vec<Vec<SignedElement>> {
        self.chosen.iter().map(|&x| vec![x]).collect()
    }
}

/// Rank 2: a cyclic sequence of atoms `X^0, ..., X^(2k-1)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rank2 {
    ground: BTreeSet<u32>,
    atoms: Vec<BTreeSet<SignedElement>>,
}

impl Rank2 {
    pub fn new(ground: BTreeSet<u32>, atoms: Vec<BTreeSet<SignedElement>>) -> Self {
        let atoms = least_rotation(atoms);
        Rank2 { ground, atoms }
    }

    pub fn from_atoms(atoms: Vec<BTreeSet<SignedElement>>) -> Self {
        let ground = atoms.iter().flatten().map(|x| x.element()).collect();
        Rank2::new(ground, atoms)
    }

    pub fn ground(&self) -> &BTreeSet<u32> {
        &self.ground
    }

    pub fn atoms(&self) -> &[BTreeSet<SignedElement>] {
        &self.atoms
    }

    /// Period length `2k`.
    pub fn period(&self) -> usize {
        self.atoms.len()
    }

    /// `(-X)^a = X^(-a)`.
    pub fn negated(&self) -> Rank2 {
        let len = self.atoms.len();
        let atoms = (0..len)
            .map(|a| self.atoms[(len - a) % len].clone())
            .collect();
        Rank2::new(self.ground.clone(), atoms)
    }

    pub fn atom_of(&self, x: SignedElement) -> Option<usize> {
        self.atoms.iter().position(|a| a.contains(&x))
    }

    fn is_positive_base(&self, t: &[SignedElement]) -> bool {
        let len = self.atoms.len();
        if t.len() != 2 || !len.is_multiple_of(2) || t[0].element() == t[1].element() {
            return false;
        }
        match (self.atom_of(t[0]), self.atom_of(t[1])) {
            (Some(a), Some(b)) => {
                let diff = (b + len - a) % len;
                (1..len / 2).contains(&diff)
            }
            _ => false,
        }
    }

    fn positive_tuples(&self) -> Vec<Vec<SignedElement>> {
        let len = self.atoms.len();
        let mut out = Vec::new();
        if !len.is_multiple_of(2) {
            return out;
        }
        for a in 0..len {
            for diff in 1..len / 2 {
                let b = (a + diff) % len;
                for &x in &self.atoms[a] {
                    for &y in &self.atoms[b] {
                        if x.element() != y.element() {
                            out.push(vec![x, y]);
                        }
                    }
                }
            }
        }
        out
    }
}

fn least_rotation(atoms: Vec<BTreeSet<SignedElement>>) -> Vec<BTreeSet<SignedElement>> {
    let len = atoms.len();
    if len == 0 {
        return atoms;
    }
    let best = (0..len)
        .min_by(|&s, &t| {
            (0..len)
                .map(|i| &atoms[(s + i) % len])
                .cmp((0..len).map(|i| &atoms[(t + i) % len]))
        })
        .unwrap_or(0);
    let mut atoms = atoms;
    atoms.rotate_left(best);
    atoms
}

/// A hyperline `(Y|Z)`: `Y` of rank `r-2`, `Z` of rank 2.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hyperline {
    pub y: Hls,
    pub z: Rank2,
}

impl Hyperline {
    /// `(-Y | -Z)`.
    pub fn negated(&self) -> Hyperline {
        Hyperline {
            y: self.y.negated(),
            z: self.z.negated(),
        }
    }

    /// Whether this is the orientation listed first in serialized output:
    /// the lexicographically least base of `Y` is positively oriented.
    pub fn is_display_orientation(&self) -> bool {
        self.y.bases().iter().next().is_none_or(|b| b.sign > 0)
    }
}

/// Rank `r > 2`: a set of hyperlines.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HigherRank {
    rank: usize,
    ground: BTreeSet<u32>,
    hyperlines: Vec<Hyperline>,
}

impl HigherRank {
    pub fn new(rank: usize, ground: BTreeSet<u32>, hyperlines: Vec<Hyperline>) -> Self {
        let mut all: Vec<Hyperline> = hyperlines
            .iter()
            .map(Hyperline::negated)
            .chain(hyperlines.iter().cloned())
            .collect();
        all.sort();
        all.dedup();
        HigherRank {
            rank,
            ground,
            hyperlines: all,
        }
    }

    /// Ground set taken to be the union over hyperlines of `E(Y) u E(Z)`.
    pub fn from_hyperlines(rank: usize, hyperlines: Vec<Hyperline>) -> Self {
        let ground = hyperlines
            .iter()
            .flat_map(|h| h.y.ground().iter().chain(h.z.ground().iter()).copied())
            .collect();
        HigherRank::new(rank, ground, hyperlines)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ground(&self) -> &BTreeSet<u32> {
        &self.ground
    }

    pub fn hyperlines(&self) -> &[Hyperline] {
        &self.hyperlines
    }

    /// Hyperlines in serialization order: each pair `{h, -h}` with its
    /// display orientation first, pairs ordered by that orientation.
    pub fn display_order(&self) -> Vec<&Hyperline> {
        let mut out = Vec::with_capacity(self.hyperlines.len());
        let mut used = vec![false; self.hyperlines.len()];
        for (i, h) in self.hyperlines.iter().enumerate() {
            if used[i] || !h.is_display_orientation() {
                continue;
            }
            used[i] = true;
            out.push(h);
            let neg = h.negated();
            if let Ok(j) = self.hyperlines.binary_search(&neg) {
                if !used[j] {
                    used[j] = true;
                    out.push(&self.hyperlines[j]);
                }
            }
        }
        for (i, h) in self.hyperlines.iter().enumerate() {
            if !used[i] {
                out.push(h);
            }
        }
        out
    }

    /// `-X = {(Y | -Z)}`.
    pub fn negated(&self) -> HigherRank {
        let hyperlines = self
            .hyperlines
            .iter()
            .map(|h| Hyperline {
                y: h.y.clone(),
                z: h.z.negated(),
            })
            .collect();
        HigherRank::new(self.rank, self.ground.clone(), hyperlines)
    }

    fn is_positive_base(&self, t: &[SignedElement]) -> bool {
        if t.len() != self.rank {
            return false;
        }
        let (head, tail) = t.split_at(self.rank - 2);
        self.hyperlines
            .iter()
            .any(|h| h.z.is_positive_base(tail) && h.y.is_positive_base(head))
    }

    fn positive_tuples(&self) -> Vec<Vec<SignedElement>> {
        let mut out = Vec::new();
        for h in &self.hyperlines {
            let ys = h.y.positive_tuples();
            let zs = h.z.positive_tuples();
            for y in &ys {
                for z in &zs {
                    let mut t = y.clone();
                    t.extend_from_slice(z);
                    out.push(t);
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }
}

/// A hyperline sequence of any rank.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Hls {
    Rank1(Rank1),
    Rank2(Rank2),
    Higher(HigherRank),
}

impl Hls {
    pub fn rank(&self) -> usize {
        match self {
            Hls::Rank1(_) => 1,
            Hls::Rank2(_) => 2,
            Hls::Higher(h) => h.rank,
        }
    }

    /// `E(X)`.
    pub fn ground(&self) -> &BTreeSet<u32> {
        match self {
            Hls::Rank1(x) => &x.ground,
            Hls::Rank2(x) => &x.ground,
            Hls::Higher(x) => &x.ground,
        }
    }

    pub fn negated(&self) -> Hls {
        match self {
            Hls::Rank1(x) => Hls::Rank1(x.negated()),
            Hls::Rank2(x) => Hls::Rank2(x.negated()),
            Hls::Higher(x) => Hls::Higher(x.negated()),
        }
    }

    /// Whether the tuple `t` is a positively oriented base.
    pub fn is_positive_base(&self, t: &[SignedElement]) -> bool {
        match self {
            Hls::Rank1(x) => x.is_positive_base(t),
            Hls::Rank2(x) => x.is_positive_base(t),
            Hls::Higher(x) => x.is_positive_base(t),
        }
    }

    /// Every positively oriented base as a tuple, sorted.
    pub fn positive_tuples(&self) -> Vec<Vec<SignedElement>> {
        match self {
            Hls::Rank1(x) => x.positive_tuples(),
            Hls::Rank2(x) => x.positive_tuples(),
            Hls::Higher(x) => x.positive_tuples(),
        }
    }

    /// Canonical forms of the positively oriented bases.
    pub fn bases(&self) -> BTreeSet<CanonicalBasis> {
        self.positive_tuples()
            .iter()
            .filter_map(|t| match normalize(t) {
                Normalized::Basis(b) => Some(b),
                Normalized::Degenerate => None,
            })
            .collect()
    }

    pub fn as_rank2(&self) -> Option<&Rank2> {
        match self {
            Hls::Rank2(x) => Some(x),
            _ => None,
        }
    }
}

/// Equality of hyperline sequences (rank-2 up to shift, higher rank as sets).
pub fn hls_equal(a: &Hls, b: &Hls) -> bool {
    a == b
}

pub fn negate_hls(x: &Hls) -> Hls {
    x.negated()
}
