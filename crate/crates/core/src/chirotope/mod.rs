//! Chirotopes: sign maps on oriented `(r-1)`-simplices.
//!
//! A [`SignMap`] stores one value in `{-1, 0, +1}` per ascending `r`-subset of
//! its ground set, in lexicographic order. Values on arbitrary tuples follow
//! by normalization (see [`SignMap::evaluate`]). A [`Chirotope`] is a sign map
//! that passed the axiom checker, or was produced by an operation that
//! preserves validity.

mod axioms;
mod minor;
mod realize;

use std::fmt;
use std::ops::Deref;

pub use axioms::{check_chirotope, check_chirotope_with, is_chirotope};
pub use minor::Deletion;
pub use realize::VectorConfig;

use crate::error::{OmError, Result};
use crate::limits::Limits;
use crate::report::ValidationReport;
use crate::simplex::{binomial, CanonicalBasis, SignedElement, Subsets};

/// Refuse to allocate sign maps with more entries than this.
const MAX_ENTRIES: u64 = 1 << 26;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignMap {
    /// Original element ids, strictly ascending. Position `i` of this vector
    /// is the compact id used for storage.
    labels: Vec<u32>,
    rank: usize,
    values: Vec<i8>,
    index: LexIndex,
}

/// Lexicographic ranking of ascending `r`-subsets of `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
struct LexIndex {
    n: usize,
    r: usize,
    total: usize,
    /// `binom[m * (r + 1) + k] = C(m, k)` for `m <= n`, `k <= r`.
    binom: Vec<usize>,
}

impl LexIndex {
    fn new(n: usize, r: usize) -> Self {
        let mut binom = vec![0usize; (n + 1) * (r + 1)];
        for m in 0..=n {
            for k in 0..=r {
                binom[m * (r + 1) + k] = binomial(m, k) as usize;
            }
        }
        LexIndex {
            n,
            r,
            total: binomial(n, r) as usize,
            binom,
        }
    }

    fn c(&self, m: usize, k: usize) -> usize {
        self.binom[m * (self.r + 1) + k]
    }

    /// Lex rank equals the reversed colex rank of the reflected subset.
    fn rank_of(&self, sorted: &[usize]) -> usize {
        let r = self.r;
        let mut colex = 0;
        for i in 0..r {
            colex += self.c(self.n - 1 - sorted[r - 1 - i], i + 1);
        }
        self.total - 1 - colex
    }
}

impl SignMap {
    /// Builds a sign map over `labels` (strictly ascending, nonempty) with
    /// `values` in lexicographic subset order.
    pub fn new(labels: Vec<u32>, rank: usize, values: Vec<i8>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(OmError::Usage("ground set must be nonempty".into()));
        }
        if labels.windows(2).any(|w| w[0] >= w[1]) || labels[0] == 0 {
            return Err(OmError::Usage(
                "element ids must be positive and strictly ascending".into(),
            ));
        }
        if rank == 0 || rank > n {
            return Err(OmError::Usage(format!(
                "rank must satisfy 1 <= r <= n (got r={rank}, n={n})"
            )));
        }
        let total = binomial(n, rank);
        if total > MAX_ENTRIES {
            return Err(OmError::SizeGuard(format!(
                "C({n},{rank}) = {total} sign entries"
            )));
        }
        if values.len() as u64 != total {
            return Err(OmError::Usage(format!(
                "expected {total} values for n={n}, r={rank}, got {}",
                values.len()
            )));
        }
        if let Some(v) = values.iter().find(|v| !(-1..=1).contains(*v)) {
            return Err(OmError::Usage(format!("sign value {v} out of range")));
        }
        Ok(SignMap {
            index: LexIndex::new(n, rank),
            labels,
            rank,
            values,
        })
    }

    /// Sign map over `{1, ..., n}`.
    pub fn standard(n: usize, rank: usize, values: Vec<i8>) -> Result<Self> {
        SignMap::new((1..=n as u32).collect(), rank, values)
    }

    pub fn zero(labels: Vec<u32>, rank: usize) -> Result<Self> {
        let total = binomial(labels.len(), rank);
        if total > MAX_ENTRIES {
            return Err(OmError::SizeGuard(format!("{total} sign entries")));
        }
        SignMap::new(labels, rank, vec![0; total as usize])
    }

    /// Fills values from `f`, called with each ascending position subset.
    pub fn from_fn(
        labels: Vec<u32>,
        rank: usize,
        mut f: impl FnMut(&[usize]) -> i8,
    ) -> Result<Self> {
        let mut map = SignMap::zero(labels, rank)?;
        for (i, s) in Subsets::new(map.n(), rank).enumerate() {
            map.values[i] = f(&s);
        }
        Ok(map)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// Values in lexicographic order of ascending subsets.
    pub fn values(&self) -> &[i8] {
        &self.values
    }

    pub fn position(&self, label: u32) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    pub fn label(&self, pos: usize) -> u32 {
        self.labels[pos]
    }

    /// Value on an ascending subset of positions.
    pub fn value(&self, sorted_positions: &[usize]) -> i8 {
        self.values[self.index.rank_of(sorted_positions)]
    }

    pub(crate) fn set_value(&mut self, sorted_positions: &[usize], v: i8) {
        let i = self.index.rank_of(sorted_positions);
        self.values[i] = v;
    }

    /// Value on an ascending support given by original ids.
    pub fn value_of_support(&self, support: &[u32]) -> Result<i8> {
        if support.windows(2).any(|w| w[0] >= w[1]) {
            return Err(OmError::Usage("support must be strictly ascending".into()));
        }
        let pos = self.positions_of(support)?;
        Ok(self.value(&pos))
    }

    fn positions_of(&self, support: &[u32]) -> Result<Vec<usize>> {
        if support.len() != self.rank {
            return Err(OmError::Usage(format!(
                "expected {} elements, got {}",
                self.rank,
                support.len()
            )));
        }
        support
            .iter()
            .map(|&e| {
                self.position(e)
                    .ok_or_else(|| OmError::Usage(format!("element {e} not in ground set")))
            })
            .collect()
    }

    /// Value on a tuple of `(position, barred)` pairs of length `rank`.
    /// Repeated positions give 0.
    pub(crate) fn sign_at(&self, tuple: &[(usize, bool)]) -> i8 {
        debug_assert_eq!(tuple.len(), self.rank);
        let mut buf = [0usize; 16];
        let mut heap;
        let pos: &mut [usize] = if tuple.len() <= 16 {
            &mut buf[..tuple.len()]
        } else {
            heap = vec![0usize; tuple.len()];
            &mut heap
        };
        let mut sign: i8 = 1;
        for (i, &(p, barred)) in tuple.iter().enumerate() {
            pos[i] = p;
            if barred {
                sign = -sign;
            }
        }
        for i in 1..pos.len() {
            let mut j = i;
            while j > 0 && pos[j - 1] > pos[j] {
                pos.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
            if j > 0 && pos[j - 1] == pos[j] {
                return 0;
            }
        }
        if pos.windows(2).any(|w| w[0] == w[1]) {
            return 0;
        }
        sign * self.value(pos)
    }

    /// Value on an arbitrary tuple of signed elements. Degenerate tuples
    /// evaluate to 0.
    pub fn evaluate(&self, sigma: &[SignedElement]) -> Result<i8> {
        if sigma.len() != self.rank {
            return Err(OmError::Usage(format!(
                "tuple of length {} for a rank-{} sign map",
                sigma.len(),
                self.rank
            )));
        }
        let tuple: Vec<(usize, bool)> = sigma
            .iter()
            .map(|x| {
                self.position(x.element())
                    .map(|p| (p, x.is_barred()))
                    .ok_or_else(|| {
                        OmError::Usage(format!("element {} not in ground set", x.element()))
                    })
            })
            .collect::<Result<_>>()?;
        Ok(self.sign_at(&tuple))
    }

    pub fn negated(&self) -> SignMap {
        let mut out = self.clone();
        for v in &mut out.values {
            *v = -*v;
        }
        out
    }

    /// Iterates `(ascending positions, value)` in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (Vec<usize>, i8)> + '_ {
        Subsets::new(self.n(), self.rank).zip(self.values.iter().copied())
    }

    /// Nonzero bases as canonical forms over original ids.
    pub fn bases(&self) -> Vec<CanonicalBasis> {
        self.entries()
            .filter(|(_, v)| *v != 0)
            .map(|(s, v)| CanonicalBasis {
                support: s.iter().map(|&p| self.labels[p]).collect(),
                sign: v,
            })
            .collect()
    }

    /// True if every value is nonzero.
    pub fn is_uniform(&self) -> bool {
        self.values.iter().all(|&v| v != 0)
    }

    /// Values rendered as `+`, `-`, `0` in lexicographic order.
    pub fn body_string(&self) -> String {
        self.values
            .iter()
            .map(|&v| match v {
                1 => '+',
                -1 => '-',
                _ => '0',
            })
            .collect()
    }
}

impl fmt::Debug for SignMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SignMap(r={}, labels={:?}, {})",
            self.rank,
            self.labels,
            self.body_string()
        )
    }
}

/// A sign map satisfying C1-C4.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Chirotope(SignMap);

/// The two chirotopes of rank `|E|` over `E`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FullClass {
    /// `[1, ..., r]` is positively oriented.
    PlusClass,
    MinusClass,
}

impl Chirotope {
    /// Validates `map` with the default size guard.
    pub fn new(map: SignMap) -> Result<Self> {
        Chirotope::new_with(map, &Limits::default())
    }

    pub fn new_with(map: SignMap, limits: &Limits) -> Result<Self> {
        let report = check_chirotope_with(&map, limits)?;
        if report.is_valid() {
            Ok(Chirotope(map))
        } else {
            Err(OmError::Invalid(report))
        }
    }

    /// Wraps a map known to be a chirotope by construction.
    pub(crate) fn trusted(map: SignMap) -> Self {
        Chirotope(map)
    }

    /// Wraps `map` without checking the axioms. Operations on an invalid
    /// chirotope may return errors or meaningless results.
    pub fn new_unchecked(map: SignMap) -> Self {
        Chirotope(map)
    }

    pub fn as_map(&self) -> &SignMap {
        &self.0
    }

    pub fn into_map(self) -> SignMap {
        self.0
    }

    pub fn negate(&self) -> Chirotope {
        Chirotope(self.0.negated())
    }

    /// Chirotope of `d + 1` coordinate hyperspheres of the `d`-sphere, with
    /// `[1, ..., d+1]` oriented by `sign`.
    pub fn coordinate(d: usize, sign: i8) -> Chirotope {
        let r = d + 1;
        let s = if sign < 0 { -1 } else { 1 };
        Chirotope(SignMap::standard(r, r, vec![s]).expect("single basis"))
    }

    /// Which of the two classes a chirotope with `n = r` belongs to.
    pub fn classify_full(&self) -> Result<FullClass> {
        if self.n() != self.rank() {
            return Err(OmError::Usage(format!(
                "classification needs n = r (got n={}, r={})",
                self.n(),
                self.rank()
            )));
        }
        match self.values()[0] {
            1 => Ok(FullClass::PlusClass),
            -1 => Ok(FullClass::MinusClass),
            _ => Err(OmError::Internal(
                "full-rank chirotope with zero basis".into(),
            )),
        }
    }
}

impl Deref for Chirotope {
    type Target = SignMap;

    fn deref(&self) -> &SignMap {
        &self.0
    }
}

impl fmt::Debug for Chirotope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Chirotope({:?})", self.0)
    }
}

/// Convenience: validates and returns the report together with the map.
pub fn validate(map: SignMap) -> Result<(SignMap, ValidationReport)> {
    let report = check_chirotope(&map)?;
    Ok((map, report))
}
