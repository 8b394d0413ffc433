use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use super::{Chirotope, SignMap};
use crate::error::{OmError, Result};
use crate::exact::{clear_denominators, det_sign, rank};
use crate::simplex::Subsets;

/// `n` nonzero rational row vectors of common length `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorConfig {
    rows: Vec<Vec<BigRational>>,
}

impl VectorConfig {
    pub fn new(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let Some(first) = rows.first() else {
            return Err(OmError::Realization("empty vector configuration".into()));
        };
        let r = first.len();
        if r == 0 {
            return Err(OmError::Realization(
                "vectors must have at least one coordinate".into(),
            ));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != r {
                return Err(OmError::Realization(format!(
                    "row {} has {} coordinates, expected {r}",
                    i + 1,
                    row.len()
                )));
            }
            if row.iter().all(|x| x.is_zero()) {
                return Err(OmError::Realization(format!(
                    "row {} is the zero vector",
                    i + 1
                )));
            }
        }
        Ok(VectorConfig { rows })
    }

    pub fn from_integers<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        VectorConfig::new(
            rows.iter()
                .map(|r| {
                    r.as_ref()
                        .iter()
                        .map(|&x| BigRational::from_integer(BigInt::from(x)))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.rows[0].len()
    }

    /// Rows scaled by positive factors to integers.
    pub fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        self.rows.iter().map(|r| clear_denominators(r)).collect()
    }

    /// Chirotope of determinant signs over `{1, ..., n}`.
    pub fn chirotope(&self) -> Result<Chirotope> {
        from_vectors(self)
    }
}

/// `values[S] = sign det(v_s : s in S)` for every ascending `r`-subset `S`.
pub fn from_vectors(config: &VectorConfig) -> Result<Chirotope> {
    let r = config.dim();
    let n = config.n();
    let rows = config.integer_rows();
    if n < r || rank(&rows) < r {
        return Err(OmError::Realization(format!(
            "vectors do not span rank {r}"
        )));
    }
    let subsets: Vec<Vec<usize>> = Subsets::new(n, r).collect();
    let values: Vec<i8> = subsets
        .par_iter()
        .map(|s| {
            let sel: Vec<&[BigInt]> = s.iter().map(|&i| rows[i].as_slice()).collect();
            det_sign(&sel)
        })
        .collect();
    Ok(Chirotope::trusted(SignMap::standard(n, r, values)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chirotope::check_chirotope;

    #[test]
    fn identity_rows() {
        let v = VectorConfig::from_integers(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]).unwrap();
        assert_eq!(from_vectors(&v).unwrap().values(), &[1]);
    }

    #[test]
    fn three_plane_vectors() {
        let v = VectorConfig::from_integers(&[[1, 0], [0, 1], [-1, 1]]).unwrap();
        let chi = from_vectors(&v).unwrap();
        assert_eq!(chi.values(), &[1, 1, 1]);
        assert!(check_chirotope(&chi).unwrap().is_valid());
    }

    #[test]
    fn basis_plus_diagonal() {
        let v = VectorConfig::from_integers(&[[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]).unwrap();
        let chi = from_vectors(&v).unwrap();
        // {1,2,3} {1,2,4} {1,3,4} {2,3,4}
        assert_eq!(chi.values(), &[1, 1, -1, 1]);
    }

    #[test]
    fn rank_deficient_or_zero_rows_rejected() {
        let v = VectorConfig::from_integers(&[[1, 2], [2, 4], [-1, -2]]).unwrap();
        assert!(matches!(from_vectors(&v), Err(OmError::Realization(_))));
        assert!(VectorConfig::from_integers(&[[1, 0], [0, 0]]).is_err());
        assert!(VectorConfig::from_integers(&[vec![1, 0], vec![1]]).is_err());
        let few = VectorConfig::from_integers(&[[1, 0, 0], [0, 1, 0]]).unwrap();
        assert!(from_vectors(&few).is_err());
    }

    #[test]
    fn fractions_keep_signs() {
        let rows = vec![
            vec![
                BigRational::new(1.into(), 3.into()),
                BigRational::from_integer(0.into()),
            ],
            vec![
                BigRational::from_integer(0.into()),
                BigRational::new((-2).into(), 7.into()),
            ],
        ];
        let chi = from_vectors(&VectorConfig::new(rows).unwrap()).unwrap();
        assert_eq!(chi.values(), &[-1]);
    }
}
