//! Fourier-Motzkin feasibility for strict homogeneous systems, used as an
//! independent route to the topes of a realizable configuration.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::chirotope::VectorConfig;
use crate::covector::SignVector;
use crate::error::{OmError, Result};
use crate::limits::Limits;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Inequality {
    coeffs: Vec<BigInt>,
    /// `coeffs . x > 0` if strict, `>= 0` otherwise.
    strict: bool,
}

impl Inequality {
    fn normalized(mut self) -> Self {
        let g = self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if !g.is_zero() {
            for c in &mut self.coeffs {
                *c /= &g;
            }
        }
        self
    }
}

/// Decides whether `{x : a . x > 0 (strict) / >= 0}` is nonempty by
/// eliminating one variable at a time. Strictness of a combination is the
/// disjunction of the strictness of its parents.
fn feasible(mut system: Vec<Inequality>, dim: usize) -> bool {
    for j in 0..dim {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for ineq in system {
            if ineq.coeffs[j].is_positive() {
                pos.push(ineq);
            } else if ineq.coeffs[j].is_negative() {
                neg.push(ineq);
            } else {
                rest.push(ineq);
            }
        }
        let mut next: BTreeSet<Inequality> = rest.into_iter().collect();
        for p in &pos {
            for q in &neg {
                let a = &p.coeffs[j];
                let b = -&q.coeffs[j];
                let coeffs: Vec<BigInt> = p
                    .coeffs
                    .iter()
                    .zip(&q.coeffs)
                    .map(|(x, y)| x * &b + y * a)
                    .collect();
                next.insert(
                    Inequality {
                        coeffs,
                        strict: p.strict || q.strict,
                    }
                    .normalized(),
                );
            }
        }
        system = next.into_iter().collect();
        if system
            .iter()
            .any(|i| i.strict && i.coeffs.iter().all(|c| c.is_zero()))
        {
            return false;
        }
    }
    !system.iter().any(|i| i.strict)
}

pub fn fm_realizable_topes(config: &VectorConfig) -> Result<BTreeSet<SignVector>> {
    fm_realizable_topes_with(config, &Limits::default())
}

/// Every `s` in `{+,-}^n` with `{x : s_i <v_i, x> > 0 for all i}` nonempty.
pub fn fm_realizable_topes_with(
    config: &VectorConfig,
    limits: &Limits,
) -> Result<BTreeSet<SignVector>> {
    let n = config.n();
    let dim = config.dim();
    if dim > limits.max_fm_rank || n > limits.max_fm_n {
        return Err(OmError::SizeGuard(format!(
            "Fourier-Motzkin oracle limited to r <= {} and n <= {} (got r={dim}, n={n})",
            limits.max_fm_rank, limits.max_fm_n
        )));
    }
    let rows = config.integer_rows();
    let found: Vec<SignVector> = (0u64..1 << n)
        .into_par_iter()
        .filter_map(|mask| {
            let signs: Vec<i8> = (0..n)
                .map(|i| if mask >> (n - 1 - i) & 1 == 1 { -1 } else { 1 })
                .collect();
            let system = rows
                .iter()
                .zip(&signs)
                .map(|(row, &s)| Inequality {
                    coeffs: row.iter().map(|c| c * BigInt::from(s)).collect(),
                    strict: true,
                })
                .collect();
            feasible(system, dim).then_some(SignVector(signs))
        })
        .collect();
    Ok(found.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn topes(rows: &[&[i64]]) -> usize {
        fm_realizable_topes(&VectorConfig::from_integers(rows).unwrap())
            .unwrap()
            .len()
    }

    #[test]
    fn octants() {
        assert_eq!(topes(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), 8);
    }

    #[test]
    fn planar_sectors() {
        assert_eq!(topes(&[&[1, 0], &[0, 1], &[-1, 1]]), 6);
        // parallel lines do not add sectors
        assert_eq!(topes(&[&[1, 0], &[2, 0], &[0, 1]]), 4);
    }

    #[test]
    fn basis_plus_diagonal() {
        assert_eq!(topes(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]), 14);
    }

    #[test]
    fn strictness_is_kept() {
        // x > 0 and -x >= 0 is infeasible, x >= 0 and -x >= 0 is not
        let sys = |s1, s2| {
            vec![
                Inequality {
                    coeffs: vec![1.into()],
                    strict: s1,
                },
                Inequality {
                    coeffs: vec![(-1).into()],
                    strict: s2,
                },
            ]
        };
        assert!(!feasible(sys(true, false), 1));
        assert!(feasible(sys(false, false), 1));
    }

    #[test]
    fn guard() {
        let v = VectorConfig::from_integers(&[[1, 0, 0, 0, 0]]).unwrap();
        assert!(matches!(
            fm_realizable_topes(&v),
            Err(OmError::SizeGuard(_))
        ));
    }
}
