//! Conversion between chirotopes and hyperline sequences.

use std::collections::BTreeSet;

use super::{check_hyperline_with, HigherRank, Hls, Hyperline, Rank1, Rank2};
use crate::chirotope::{Chirotope, SignMap};
use crate::error::{OmError, Result};
use crate::limits::Limits;
use crate::report::{Axiom, ValidationReport, Witness};
use crate::simplex::{SignedElement, Subsets};

/// Which element of an atom drives the next step of the rank-2 sweep. The
/// result does not depend on it for chirotopes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Representative {
    #[default]
    Smallest,
    Largest,
}

pub fn from_chirotope(chi: &Chirotope) -> Result<Hls> {
    from_chirotope_with(chi, Representative::Smallest)
}

pub fn from_chirotope_with(chi: &Chirotope, rep: Representative) -> Result<Hls> {
    from_sign_map(chi.as_map(), rep).map_err(|e| match e {
        OmError::Construction(msg) => OmError::Internal(format!(
            "hyperline construction failed on a chirotope: {msg}"
        )),
        e => e,
    })
}

/// Runs the construction on an arbitrary sign map. Fails with
/// [`OmError::Construction`] when some step has no output (an empty atom,
/// a sweep that never closes, no hyperline at all); otherwise returns a
/// structure that may or may not pass [`super::check_hyperline`].
pub fn from_sign_map(m: &SignMap, rep: Representative) -> Result<Hls> {
    match m.rank() {
        1 => Ok(Hls::Rank1(rank1(m))),
        2 => Ok(Hls::Rank2(rank2(m, rep)?)),
        _ => higher(m, rep).map(Hls::Higher),
    }
}

fn signed(m: &SignMap, (p, barred): (usize, bool)) -> SignedElement {
    SignedElement::new(m.label(p), barred)
}

fn rank1(m: &SignMap) -> Rank1 {
    let chosen = (0..m.n())
        .filter_map(|p| match m.value(&[p]) {
            1 => Some(SignedElement::pos(m.label(p))),
            -1 => Some(SignedElement::neg(m.label(p))),
            _ => None,
        })
        .collect();
    Rank1::new(m.labels().iter().copied().collect(), chosen)
}

/// The rank-2 sweep: starting from the smallest element `e`, each atom
/// collects the signed elements immediately following the previous
/// representative in the cyclic order, until `e` is reached again.
fn rank2(m: &SignMap, rep: Representative) -> Result<Rank2> {
    let signed_all: Vec<(usize, bool)> = (0..m.n()).flat_map(|p| [(p, false), (p, true)]).collect();
    let chi = |x: (usize, bool), y: (usize, bool)| m.sign_at(&[x, y]);
    let next_atom = |from: (usize, bool)| -> Vec<(usize, bool)> {
        let ahead: Vec<(usize, bool)> = signed_all
            .iter()
            .copied()
            .filter(|&y| chi(from, y) == 1)
            .collect();
        ahead
            .iter()
            .copied()
            .filter(|&x| ahead.iter().all(|&y| chi(x, y) >= 0))
            .collect()
    };
    let e = (0, false);
    let mut atoms: Vec<Vec<(usize, bool)>> = Vec::new();
    let mut from = e;
    loop {
        let atom = next_atom(from);
        if atom.is_empty() {
            return Err(OmError::Construction(format!(
                "atom {} of the rank-2 sweep is empty",
                atoms.len()
            )));
        }
        let closes = atom.contains(&e);
        from = match rep {
            Representative::Smallest => atom[0],
            Representative::Largest => atom[atom.len() - 1],
        };
        atoms.push(atom);
        if closes {
            break;
        }
        if atoms.len() > signed_all.len() {
            return Err(OmError::Construction(
                "rank-2 sweep does not return to its start".into(),
            ));
        }
    }
    let atoms = atoms
        .into_iter()
        .map(|a| a.into_iter().map(|x| signed(m, x)).collect::<BTreeSet<_>>())
        .collect();
    Ok(Rank2::new(m.labels().iter().copied().collect(), atoms))
}

fn higher(m: &SignMap, rep: Representative) -> Result<HigherRank> {
    let r = m.rank();
    let mut hyperlines = Vec::new();
    for s in Subsets::new(m.n(), r - 2) {
        let fixed: Vec<u32> = s.iter().map(|&p| m.label(p)).collect();
        let around = match m.contract_raw(&fixed) {
            Ok(c) => c,
            Err(OmError::Contraction(_)) => continue,
            Err(e) => return Err(e),
        };
        let z = rank2(&around, rep)?;

        // a positive base [z1, z2] of the contraction, in positions of m
        let (pair, v) = around
            .entries()
            .find(|(_, v)| *v != 0)
            .ok_or_else(|| OmError::Construction("contraction without bases".into()))?;
        let z1 = (m.position(around.label(pair[0])).unwrap(), false);
        let z2 = (m.position(around.label(pair[1])).unwrap(), v < 0);

        let flat: Vec<u32> = m
            .labels()
            .iter()
            .copied()
            .filter(|e| around.position(*e).is_none())
            .collect();
        let flat_pos: Vec<usize> = flat.iter().map(|&e| m.position(e).unwrap()).collect();
        let mut tuple = vec![(0usize, false); r];
        tuple[r - 2] = z1;
        tuple[r - 1] = z2;
        let on_flat = SignMap::from_fn(flat, r - 2, |t| {
            for (i, &j) in t.iter().enumerate() {
                tuple[i] = (flat_pos[j], false);
            }
            m.sign_at(&tuple)
        })?;
        let y = from_sign_map(&on_flat, rep)?;
        hyperlines.push(Hyperline { y, z });
    }
    if hyperlines.is_empty() {
        return Err(OmError::Construction(
            "no (r-2)-subset extends to a nonzero basis".into(),
        ));
    }
    Ok(HigherRank::new(
        r,
        m.labels().iter().copied().collect(),
        hyperlines,
    ))
}

/// The chirotope whose positively oriented bases are those of `x`.
pub fn to_chirotope(x: &Hls) -> Result<Chirotope> {
    to_chirotope_with(x, &Limits::default())
}

pub fn to_chirotope_with(x: &Hls, limits: &Limits) -> Result<Chirotope> {
    let report = check_hyperline_with(x, limits)?;
    if !report.is_valid() {
        return Err(OmError::Invalid(report));
    }
    let labels: Vec<u32> = x.ground().iter().copied().collect();
    let mut map = SignMap::zero(labels, x.rank())?;
    for b in x.bases() {
        let pos: Vec<usize> = b
            .support
            .iter()
            .map(|&e| map.position(e).unwrap())
            .collect();
        map.set_value(&pos, b.sign);
    }
    let mut covered = vec![false; map.n()];
    for (s, v) in map.entries() {
        if v != 0 {
            s.into_iter().for_each(|p| covered[p] = true);
        }
    }
    if let Some(p) = covered.iter().position(|c| !c) {
        let mut report = ValidationReport::default();
        report.push(Axiom::C1, Witness::Element(map.label(p)));
        return Err(OmError::Invalid(report));
    }
    Ok(Chirotope::trusted(map))
}

/// `X \ R_d / R_c`, computed through the chirotope.
pub fn minor_hls(x: &Hls, delete: &[u32], contract: &[u32]) -> Result<Hls> {
    let mut chi = to_chirotope(x)?;
    if !delete.is_empty() {
        chi = chi.delete(delete)?.into_chirotope()?;
    }
    if !contract.is_empty() {
        chi = chi.contract(contract)?;
    }
    from_chirotope(&chi)
}
