//! Ground sets, signed elements and oriented simplices up to equivalence.

use std::fmt;
use std::str::FromStr;

use crate::error::{OmError, Result};

/// The ground set `{1, ..., n}` in its standard order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroundSet {
    n: u32,
}

impl GroundSet {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(OmError::Usage("ground set must be nonempty".into()));
        }
        Ok(GroundSet { n })
    }

    pub fn len(&self) -> u32 {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, e: u32) -> bool {
        (1..=self.n).contains(&e)
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        1..=self.n
    }
}

/// An element `e` or its barred copy `~e`.
///
/// Ordered as `1 < ~1 < 2 < ~2 < ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedElement {
    element: u32,
    barred: bool,
}

impl SignedElement {
    pub const fn pos(element: u32) -> Self {
        SignedElement {
            element,
            barred: false,
        }
    }

    pub const fn neg(element: u32) -> Self {
        SignedElement {
            element,
            barred: true,
        }
    }

    pub const fn new(element: u32, barred: bool) -> Self {
        SignedElement { element, barred }
    }

    /// The underlying element `x*`.
    pub const fn element(self) -> u32 {
        self.element
    }

    pub const fn is_barred(self) -> bool {
        self.barred
    }

    /// `+1` for `e`, `-1` for `~e`.
    pub const fn sign(self) -> i8 {
        if self.barred {
            -1
        } else {
            1
        }
    }

    pub const fn involute(self) -> Self {
        SignedElement {
            element: self.element,
            barred: !self.barred,
        }
    }
}

impl fmt::Display for SignedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.barred {
            write!(f, "~{}", self.element)
        } else {
            write!(f, "{}", self.element)
        }
    }
}

impl FromStr for SignedElement {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let (barred, digits) = match s.strip_prefix('~') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("invalid signed element {s:?}"));
        }
        let element: u32 = digits
            .parse()
            .map_err(|_| format!("invalid signed element {s:?}"))?;
        if element == 0 {
            return Err("element ids start at 1".into());
        }
        Ok(SignedElement { element, barred })
    }
}

/// Formats a tuple of signed elements as `[1,~2,3]`.
pub fn fmt_tuple(t: &[SignedElement]) -> String {
    let inner: Vec<String> = t.iter().map(|x| x.to_string()).collect();
    format!("[{}]", inner.join(","))
}

/// An ordered tuple of signed elements with pairwise distinct underlying
/// elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrientedSimplex {
    entries: Vec<SignedElement>,
}

impl OrientedSimplex {
    /// Returns `None` if underlying elements repeat.
    pub fn new(entries: Vec<SignedElement>) -> Option<Self> {
        let mut seen: Vec<u32> = entries.iter().map(|x| x.element()).collect();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some(OrientedSimplex { entries })
    }

    pub fn entries(&self) -> &[SignedElement] {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.len().saturating_sub(1)
    }

    /// `-[x1, ..., xd, x(d+1)] = [x1, ..., xd, ~x(d+1)]`.
    pub fn negated(&self) -> Self {
        let mut entries = self.entries.clone();
        if let Some(last) = entries.last_mut() {
            *last = last.involute();
        }
        OrientedSimplex { entries }
    }

    pub fn canonical(&self) -> CanonicalBasis {
        match normalize(&self.entries) {
            Normalized::Basis(b) => b,
            Normalized::Degenerate => unreachable!("simplex entries are distinct"),
        }
    }
}

/// The representative `[e1, ..., ek]` (sign +1) or `[e1, ..., ~ek]` (sign -1)
/// of an equivalence class of oriented simplices, `e1 < ... < ek`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalBasis {
    pub support: Vec<u32>,
    pub sign: i8,
}

impl CanonicalBasis {
    pub fn negated(&self) -> Self {
        CanonicalBasis {
            support: self.support.clone(),
            sign: -self.sign,
        }
    }
}

impl fmt::Display for CanonicalBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.support.iter().map(|e| e.to_string()).collect();
        write!(
            f,
            "{}{{{}}}",
            if self.sign < 0 { "-" } else { "+" },
            s.join(",")
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Normalized {
    Basis(CanonicalBasis),
    /// Some underlying element repeats.
    Degenerate,
}

impl Normalized {
    pub fn sign(&self) -> i8 {
        match self {
            Normalized::Basis(b) => b.sign,
            Normalized::Degenerate => 0,
        }
    }
}

pub fn involute(x: SignedElement) -> SignedElement {
    x.involute()
}

/// Sorts a tuple into ascending support, folding the permutation parity and
/// every bar into a single sign.
pub fn normalize(sigma: &[SignedElement]) -> Normalized {
    let mut support: Vec<u32> = sigma.iter().map(|x| x.element()).collect();
    let mut sign: i8 = sigma.iter().map(|x| x.sign()).product();
    // insertion sort, counting transpositions
    for i in 1..support.len() {
        let mut j = i;
        while j > 0 && support[j - 1] > support[j] {
            support.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if support.windows(2).any(|w| w[0] == w[1]) {
        return Normalized::Degenerate;
    }
    Normalized::Basis(CanonicalBasis { support, sign })
}

/// Ascending `k`-subsets of `0..n` in lexicographic order.
#[derive(Debug, Clone)]
pub struct Subsets {
    n: usize,
    current: Vec<usize>,
    done: bool,
}

impl Subsets {
    pub fn new(n: usize, k: usize) -> Self {
        Subsets {
            n,
            current: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Subsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let k = self.current.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.current[i] < self.n - k + i {
                self.current[i] += 1;
                for j in i + 1..k {
                    self.current[j] = self.current[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Supports of the oriented `d`-simplices of `ground`: ascending
/// `(d+1)`-subsets of `{1, ..., n}` in lexicographic order. Empty when
/// `d + 1 > n`.
pub fn enumerate_simplices(ground: GroundSet, d: usize) -> impl Iterator<Item = Vec<u32>> {
    Subsets::new(ground.len() as usize, d + 1)
        .map(|s| s.into_iter().map(|i| i as u32 + 1).collect())
}

/// Binomial coefficient, saturating at `u64::MAX`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}
