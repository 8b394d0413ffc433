//! Deletion and contraction. Minors keep the original element ids as labels.

use super::{check_chirotope_with, Chirotope, SignMap};
use crate::error::{OmError, Result};
use crate::limits::Limits;
use crate::report::ValidationReport;

/// A deleted sign map and its validation report; multi-element deletions
/// are not guaranteed to stay chirotopes.
#[derive(Debug, Clone)]
pub struct Deletion {
    pub map: SignMap,
    pub report: ValidationReport,
}

impl Deletion {
    pub fn is_valid(&self) -> bool {
        self.report.is_valid()
    }

    pub fn into_chirotope(self) -> Result<Chirotope> {
        if self.report.is_valid() {
            Ok(Chirotope::trusted(self.map))
        } else {
            Err(OmError::Invalid(self.report))
        }
    }
}

fn sorted_positions(map: &SignMap, set: &[u32]) -> Result<Vec<usize>> {
    let mut pos = set
        .iter()
        .map(|&e| {
            map.position(e)
                .ok_or_else(|| OmError::Usage(format!("element {e} not in ground set")))
        })
        .collect::<Result<Vec<_>>>()?;
    pos.sort_unstable();
    if pos.windows(2).any(|w| w[0] == w[1]) {
        return Err(OmError::Usage("repeated element in minor set".into()));
    }
    Ok(pos)
}

impl SignMap {
    /// Restriction to supports avoiding `removed`, without validation.
    pub fn delete_raw(&self, removed: &[u32]) -> Result<SignMap> {
        let gone = sorted_positions(self, removed)?;
        let kept: Vec<usize> = (0..self.n()).filter(|p| !gone.contains(p)).collect();
        if kept.len() < self.rank() {
            return Err(OmError::Deletion {
                remaining: kept.len(),
                rank: self.rank(),
            });
        }
        let labels = kept.iter().map(|&p| self.label(p)).collect();
        SignMap::from_fn(labels, self.rank(), |s| {
            let orig: Vec<usize> = s.iter().map(|&i| kept[i]).collect();
            self.value(&orig)
        })
    }

    /// `(chi / R)([t...]) = chi([R..., t...])` over the elements completing
    /// `R` to a nonzero basis, without validation.
    pub fn contract_raw(&self, contracted: &[u32]) -> Result<SignMap> {
        let r = self.rank();
        let fixed = sorted_positions(self, contracted)?;
        if fixed.len() >= r {
            return Err(OmError::Contraction(format!(
                "contracting {} element(s) needs rank greater than {} (rank is {r})",
                fixed.len(),
                fixed.len()
            )));
        }
        let mut completes = vec![false; self.n()];
        for (s, v) in self.entries() {
            if v != 0 && fixed.iter().all(|p| s.binary_search(p).is_ok()) {
                for p in s {
                    completes[p] = true;
                }
            }
        }
        for &p in &fixed {
            completes[p] = false;
        }
        let rest: Vec<usize> = (0..self.n()).filter(|&p| completes[p]).collect();
        if rest.is_empty() {
            return Err(OmError::Contraction(
                "contracted set is not contained in any nonzero basis".into(),
            ));
        }
        let labels = rest.iter().map(|&p| self.label(p)).collect();
        let mut tuple: Vec<(usize, bool)> = fixed.iter().map(|&p| (p, false)).collect();
        let k = tuple.len();
        tuple.resize(r, (0, false));
        SignMap::from_fn(labels, r - k, |s| {
            for (i, &j) in s.iter().enumerate() {
                tuple[k + i] = (rest[j], false);
            }
            self.sign_at(&tuple)
        })
    }
}

impl Chirotope {
    pub fn delete(&self, removed: &[u32]) -> Result<Deletion> {
        self.delete_with(removed, &Limits::default())
    }

    pub fn delete_with(&self, removed: &[u32], limits: &Limits) -> Result<Deletion> {
        let map = self.as_map().delete_raw(removed)?;
        let report = check_chirotope_with(&map, limits)?;
        Ok(Deletion { map, report })
    }

    /// Smallest element whose single deletion is again a rank-`r` chirotope.
    pub fn find_deletable(&self) -> Result<u32> {
        self.find_deletable_with(&Limits::default())
    }

    pub fn find_deletable_with(&self, limits: &Limits) -> Result<u32> {
        if self.n() == self.rank() {
            return Err(OmError::NoDeletableElement);
        }
        for &e in self.labels() {
            if self.delete_with(&[e], limits)?.is_valid() {
                return Ok(e);
            }
        }
        Err(OmError::Internal(
            "no single-element deletion is a chirotope although n > r".into(),
        ))
    }

    pub fn contract(&self, contracted: &[u32]) -> Result<Chirotope> {
        Ok(Chirotope::trusted(self.as_map().contract_raw(contracted)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chirotope::{check_chirotope, VectorConfig};

    fn chi(rows: &[&[i64]]) -> Chirotope {
        VectorConfig::from_integers(rows)
            .unwrap()
            .chirotope()
            .unwrap()
    }

    #[test]
    fn delete_examples() {
        let c = chi(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]);
        let d = c.delete(&[4]).unwrap();
        assert!(d.is_valid());
        assert_eq!(d.map.labels(), &[1, 2, 3]);
        assert_eq!(d.map.values(), &[1]);

        let plus = Chirotope::coordinate(2, 1);
        assert!(matches!(
            plus.delete(&[1]),
            Err(OmError::Deletion {
                remaining: 2,
                rank: 3
            })
        ));

        let planar = chi(&[&[1, 0], &[0, 1], &[-1, 1]]);
        let d = planar.delete(&[2]).unwrap();
        assert!(d.is_valid());
        assert_eq!(d.map.labels(), &[1, 3]);
        assert_eq!(d.map.value_of_support(&[1, 3]).unwrap(), 1);
    }

    #[test]
    fn deletion_can_break_validity() {
        // 1 and 2 parallel, 3 independent: deleting 3 leaves a rank-2 map
        // with no basis
        let c = chi(&[&[1, 0], &[2, 0], &[0, 1]]);
        let d = c.delete(&[3]).unwrap();
        assert!(!d.is_valid());
        assert!(d.into_chirotope().is_err());
    }

    #[test]
    fn find_deletable_examples() {
        let c = chi(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]);
        assert_eq!(c.find_deletable().unwrap(), 1);
        assert!(matches!(
            Chirotope::coordinate(2, 1).find_deletable(),
            Err(OmError::NoDeletableElement)
        ));
        let c = chi(&[&[1, 0], &[0, 1], &[-1, 1], &[1, 1]]);
        assert_eq!(c.find_deletable().unwrap(), 1);
        // coloop-like: only element 3 can go
        let c = chi(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[0, 0, 2]]);
        assert_eq!(c.find_deletable().unwrap(), 3);
    }

    #[test]
    fn contract_examples() {
        let plus = Chirotope::coordinate(2, 1);
        let c = plus.contract(&[1]).unwrap();
        assert_eq!(c.labels(), &[2, 3]);
        assert_eq!(c.values(), &[1]);
        assert!(matches!(
            plus.contract(&[1, 2, 3]),
            Err(OmError::Contraction(_))
        ));
        assert!(matches!(plus.contract(&[7]), Err(OmError::Usage(_))));
    }

    #[test]
    fn contract_matches_projection() {
        let c = chi(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]);
        let con = c.contract(&[4]).unwrap();
        assert_eq!(con.labels(), &[1, 2, 3]);
        assert!(check_chirotope(&con).unwrap().is_valid());
        // det[v4, a, b] = det[a, b, v4]; in the plane orthogonal to v4 use
        // the basis u = (1,-1,0), w = (1,1,-2); coordinates of e_i are
        // (<e_i,u>/2, <e_i,w>/6) and orientation (u, w, v4) is positive.
        let proj = VectorConfig::new(
            [[1i64, 1], [-1, 1], [0, -2]]
                .iter()
                .map(|r| {
                    vec![
                        num_rational::BigRational::new(r[0].into(), 2.into()),
                        num_rational::BigRational::new(r[1].into(), 6.into()),
                    ]
                })
                .collect(),
        )
        .unwrap()
        .chirotope()
        .unwrap();
        assert_eq!(con.values(), proj.values());
    }

    #[test]
    fn contract_skips_parallel_elements() {
        // element 2 is parallel to element 1, so it is a loop of chi/{1}
        let c = chi(&[&[1, 0, 0], &[3, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let con = c.contract(&[1]).unwrap();
        assert_eq!(con.labels(), &[3, 4]);
    }
}
