//! Explicit arrangements in rank 1 and 2, and the coordinate arrangements.
//!
//! A rank-1 arrangement places each element's positive side at one of the
//! two points of the 0-sphere. A rank-2 arrangement places each element's
//! positive point at a position of the cyclic group `C_2k` embedded in the
//! circle; its negative point sits at the antipode `a + k`.

use std::collections::{BTreeMap, BTreeSet};

use crate::chirotope::{Chirotope, FullClass};
use crate::error::{OmError, Result};
use crate::hyperline::{Rank1, Rank2};
use crate::simplex::SignedElement;

/// The coordinate arrangement of `d + 1` great spheres in the `d`-sphere,
/// oriented so that `[1, ..., d+1]` has sign `sign`.
pub fn canonical_arrangement(d: usize, sign: i8) -> Chirotope {
    Chirotope::coordinate(d, sign)
}

/// A chirotope with `n = r` is equivalent to exactly one of the two
/// coordinate arrangements; this tells which.
pub fn classify_arrangement_full(chi: &Chirotope) -> Result<FullClass> {
    chi.classify_full()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrangementR1 {
    /// `+1` if the element's positive side is the point `+1` of the 0-sphere.
    pub positive_side: BTreeMap<u32, i8>,
}

pub fn represent_rank1(x: &Rank1) -> ArrangementR1 {
    ArrangementR1 {
        positive_side: x.chosen().iter().map(|s| (s.element(), s.sign())).collect(),
    }
}

pub fn read_rank1(a: &ArrangementR1) -> Rank1 {
    Rank1::from_chosen(
        a.positive_side
            .iter()
            .map(|(&e, &s)| SignedElement::new(e, s < 0)),
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrangementR2 {
    /// `2k`.
    pub period: usize,
    /// Position in `C_2k` of each element's positive point.
    pub positions: BTreeMap<u32, usize>,
}

pub fn represent_rank2(x: &Rank2) -> Result<ArrangementR2> {
    let mut positions = BTreeMap::new();
    for (a, atom) in x.atoms().iter().enumerate() {
        for s in atom.iter().filter(|s| !s.is_barred()) {
            if positions.insert(s.element(), a).is_some() {
                return Err(OmError::Usage(format!(
                    "element {} in two atoms",
                    s.element()
                )));
            }
        }
    }
    if positions.keys().ne(x.ground().iter()) {
        return Err(OmError::Usage("atoms do not place every element".into()));
    }
    Ok(ArrangementR2 {
        period: x.period(),
        positions,
    })
}

pub fn read_rank2(a: &ArrangementR2) -> Result<Rank2> {
    if a.period < 2 || !a.period.is_multiple_of(2) {
        return Err(OmError::Usage(format!("period {} is not even", a.period)));
    }
    let k = a.period / 2;
    let mut atoms = vec![BTreeSet::new(); a.period];
    for (&e, &p) in &a.positions {
        if p >= a.period {
            return Err(OmError::Usage(format!(
                "position {p} of element {e} outside C_{}",
                a.period
            )));
        }
        atoms[p].insert(SignedElement::pos(e));
        atoms[(p + k) % a.period].insert(SignedElement::neg(e));
    }
    if let Some(i) = atoms.iter().position(|x| x.is_empty()) {
        return Err(OmError::Usage(format!("no point at position {i}")));
    }
    Ok(Rank2::new(a.positions.keys().copied().collect(), atoms))
}
