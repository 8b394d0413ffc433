//! Sign vectors of the arrangement: cocircuits, their composition closure
//! (covectors), topes, and the graded face census in rank 3.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::chirotope::{Chirotope, SignMap};
use crate::error::{OmError, Result};
use crate::limits::Limits;
use crate::simplex::Subsets;

/// A total map from the ground set (by position) to `{-1, 0, +1}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignVector(pub Vec<i8>);

impl SignVector {
    pub fn zero(n: usize) -> Self {
        SignVector(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Positions where the vector vanishes.
    pub fn zero_support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] == 0).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&v| v == 0)
    }

    pub fn is_full(&self) -> bool {
        self.0.iter().all(|&v| v != 0)
    }

    pub fn negated(&self) -> SignVector {
        SignVector(self.0.iter().map(|&v| -v).collect())
    }

    /// `(u o v)(e) = u(e)` if nonzero, else `v(e)`.
    pub fn compose(&self, other: &SignVector) -> SignVector {
        SignVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&u, &v)| if u != 0 { u } else { v })
                .collect(),
        )
    }

    /// `self <= other` in the conformal order: `other` agrees with `self`
    /// wherever `self` is nonzero.
    pub fn conforms_to(&self, other: &SignVector) -> bool {
        self.0.iter().zip(&other.0).all(|(&u, &w)| u == 0 || u == w)
    }

    /// Sign of the first nonzero entry, 0 for the zero vector.
    fn leading_sign(&self) -> i8 {
        self.0.iter().copied().find(|&v| v != 0).unwrap_or(0)
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &v in &self.0 {
            f.write_str(match v {
                1 => "+",
                -1 => "-",
                _ => "0",
            })?;
        }
        Ok(())
    }
}

pub fn compose(u: &SignVector, v: &SignVector) -> SignVector {
    u.compose(v)
}

/// For each `(r-1)`-subset `B` extending to a nonzero basis, the pair
/// `+-c_B` with `c_B(e) = chi([B, e])`.
pub fn cocircuits(chi: &Chirotope) -> BTreeSet<SignVector> {
    cocircuits_of(chi.as_map())
}

pub(crate) fn cocircuits_of(m: &SignMap) -> BTreeSet<SignVector> {
    let n = m.n();
    let r = m.rank();
    let mut out = BTreeSet::new();
    for b in Subsets::new(n, r - 1) {
        let mut tuple: Vec<(usize, bool)> = b.iter().map(|&p| (p, false)).collect();
        tuple.push((0, false));
        let c = SignVector(
            (0..n)
                .map(|e| {
                    tuple[r - 1] = (e, false);
                    m.sign_at(&tuple)
                })
                .collect(),
        );
        if c.is_zero() {
            continue;
        }
        let c = if c.leading_sign() < 0 { c.negated() } else { c };
        out.insert(c.negated());
        out.insert(c);
    }
    out
}

pub fn covectors(chi: &Chirotope) -> Result<BTreeSet<SignVector>> {
    covectors_with(chi, &Limits::default())
}

/// The zero vector together with every composition of cocircuits.
pub fn covectors_with(chi: &Chirotope, limits: &Limits) -> Result<BTreeSet<SignVector>> {
    if chi.n() > limits.max_n {
        return Err(OmError::SizeGuard(format!(
            "covector closure limited to n <= {} (got {})",
            limits.max_n,
            chi.n()
        )));
    }
    let cocircuits: Vec<SignVector> = cocircuits(chi).into_iter().collect();
    let mut all: BTreeSet<SignVector> = cocircuits.iter().cloned().collect();
    all.insert(SignVector::zero(chi.n()));
    let mut frontier: Vec<SignVector> = cocircuits.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for u in &frontier {
            if u.is_full() {
                continue;
            }
            for c in &cocircuits {
                let w = u.compose(c);
                if w != *u && all.insert(w.clone()) {
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    Ok(all)
}

/// Full-support covectors.
pub fn topes(chi: &Chirotope) -> Result<BTreeSet<SignVector>> {
    Ok(covectors(chi)?
        .into_iter()
        .filter(|v| v.is_full())
        .collect())
}

/// Face numbers of the rank-3 arrangement on the 2-sphere.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FaceCensus {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler: i64,
}

impl fmt::Display for FaceCensus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "V={} E={} F={} euler={}",
            self.vertices, self.edges, self.faces, self.euler
        )
    }
}

/// Heights of nonzero covectors: length of the longest conformal chain
/// down to a cocircuit.
pub fn conformal_heights(covectors: &BTreeSet<SignVector>) -> BTreeMap<SignVector, usize> {
    let mut by_size: Vec<&SignVector> = covectors.iter().filter(|v| !v.is_zero()).collect();
    by_size.sort_by_key(|v| v.0.iter().filter(|&&x| x != 0).count());
    let mut height: BTreeMap<SignVector, usize> = BTreeMap::new();
    for (i, w) in by_size.iter().enumerate() {
        let h = by_size[..i]
            .iter()
            .filter(|u| u.conforms_to(w) && **u != *w)
            .map(|u| height[*u] + 1)
            .max()
            .unwrap_or(0);
        height.insert((*w).clone(), h);
    }
    height
}

pub fn face_census(chi: &Chirotope) -> Result<FaceCensus> {
    face_census_with(chi, &Limits::default())
}

pub fn face_census_with(chi: &Chirotope, limits: &Limits) -> Result<FaceCensus> {
    if chi.rank() != 3 {
        return Err(OmError::Usage(format!(
            "face census is defined for rank 3 only (got rank {})",
            chi.rank()
        )));
    }
    let all = covectors_with(chi, limits)?;
    let heights = conformal_heights(&all);
    let mut counts = [0usize; 3];
    for (v, &h) in &heights {
        if h > 2 {
            return Err(OmError::Internal(format!(
                "covector {v} has conformal height {h}"
            )));
        }
        if h == 2 && !v.is_full() {
            return Err(OmError::Internal(format!(
                "height-2 covector {v} is not a tope"
            )));
        }
        counts[h] += 1;
    }
    let topes = all.iter().filter(|v| v.is_full()).count();
    if counts[2] != topes {
        return Err(OmError::Internal(format!(
            "{} height-2 covectors but {topes} topes",
            counts[2]
        )));
    }
    if counts[0] != cocircuits(chi).len() {
        return Err(OmError::Internal(
            "minimal covectors differ from cocircuits".into(),
        ));
    }
    let census = FaceCensus {
        vertices: counts[0],
        edges: counts[1],
        faces: counts[2],
        euler: counts[0] as i64 - counts[1] as i64 + counts[2] as i64,
    };
    if census.euler != 2 {
        return Err(OmError::Internal(format!("Euler characteristic {census}")));
    }
    Ok(census)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chirotope::VectorConfig;

    fn sv(s: &str) -> SignVector {
        SignVector(
            s.chars()
                .map(|c| match c {
                    '+' => 1,
                    '-' => -1,
                    _ => 0,
                })
                .collect(),
        )
    }

    fn chi(rows: &[&[i64]]) -> Chirotope {
        VectorConfig::from_integers(rows)
            .unwrap()
            .chirotope()
            .unwrap()
    }

    #[test]
    fn composition() {
        assert_eq!(compose(&sv("00+"), &sv("+-0")), sv("+-+"));
        assert_eq!(compose(&sv("+-0"), &sv("+-0")), sv("+-0"));
        assert_eq!(compose(&sv("+00"), &sv("000")), sv("+00"));
    }

    #[test]
    fn coordinate_cocircuits() {
        let plus = Chirotope::coordinate(2, 1);
        let cc = cocircuits(&plus);
        assert_eq!(cc.len(), 6);
        assert!(cc.contains(&sv("00+")) && cc.contains(&sv("00-")));
        assert!(cc.contains(&sv("+00")) && cc.contains(&sv("0+0")));
    }

    #[test]
    fn diagonal_configuration_cocircuits() {
        let c = chi(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]);
        assert_eq!(cocircuits(&c).len(), 12);
    }

    #[test]
    fn coordinate_covectors_are_everything() {
        let all = covectors(&Chirotope::coordinate(2, 1)).unwrap();
        assert_eq!(all.len(), 27);
        let r1 = Chirotope::coordinate(0, 1);
        let all: Vec<_> = covectors(&r1).unwrap().into_iter().collect();
        assert_eq!(all, vec![sv("-"), sv("0"), sv("+")]);
    }

    #[test]
    fn censuses() {
        let c = face_census(&Chirotope::coordinate(2, 1)).unwrap();
        assert_eq!(c.to_string(), "V=6 E=12 F=8 euler=2");
        let c = face_census(&chi(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]])).unwrap();
        assert_eq!((c.vertices, c.edges, c.faces), (12, 24, 14));
        // circle 4 passes through the vertex +-e3 shared by circles 1 and 2:
        // 2 + 3*2 vertices, 6 + 3*4 edges, 6 sectors times 2 hemispheres
        let c = face_census(&chi(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 0]])).unwrap();
        assert_eq!(c.euler, 2);
        assert_eq!((c.vertices, c.edges, c.faces), (8, 18, 12));
        assert!(matches!(
            face_census(&Chirotope::coordinate(3, 1)),
            Err(OmError::Usage(_))
        ));
    }

    #[test]
    fn five_generic_topes() {
        let c = chi(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1], &[1, -2, 3]]);
        assert_eq!(topes(&c).unwrap().len(), 22);
    }
}
