//! The C1-C4 checker.
//!
//! C2 holds by construction of [`SignMap::sign_at`]. For C4 the premise and
//! conclusion are products of pairs of values; flipping the bar on any of
//! `x(r-1)`, `x(r)`, `y1`, `y2` negates all three products at once, and bars
//! or reorderings among `x1..x(r-2)` leave them unchanged. So it suffices to
//! range over unbarred elements with an ascending `x1 < ... < x(r-2)` prefix
//! and test both the relation and its negation.

use rayon::prelude::*;

use super::SignMap;
use crate::error::{OmError, Result};
use crate::limits::Limits;
use crate::report::{Axiom, ValidationReport, Witness};
use crate::simplex::{SignedElement, Subsets};

pub fn check_chirotope(m: &SignMap) -> Result<ValidationReport> {
    check_chirotope_with(m, &Limits::default())
}

/// Lists every violated axiom with its smallest witness (C1: every failing
/// element).
pub fn check_chirotope_with(m: &SignMap, limits: &Limits) -> Result<ValidationReport> {
    guard(m, limits)?;
    let mut report = ValidationReport::default();
    for e in c1_failures(m) {
        report.push(Axiom::C1, Witness::Element(m.label(e)));
    }
    if let Some(w) = c3_witness(m) {
        report.push(Axiom::C3, w);
    }
    if let Some(w) = c4_witness(m) {
        report.push(Axiom::C4, w);
    }
    Ok(report)
}

/// Early-exit validity test.
pub fn is_chirotope(m: &SignMap, limits: &Limits) -> Result<bool> {
    guard(m, limits)?;
    Ok(c1_failures(m).is_empty() && c3_witness(m).is_none() && c4_witness(m).is_none())
}

fn guard(m: &SignMap, limits: &Limits) -> Result<()> {
    if m.n() > limits.max_n || m.rank() > limits.max_rank {
        return Err(OmError::SizeGuard(format!(
            "axiom check limited to n <= {} and r <= {} (got n={}, r={})",
            limits.max_n,
            limits.max_rank,
            m.n(),
            m.rank()
        )));
    }
    Ok(())
}

fn c1_failures(m: &SignMap) -> Vec<usize> {
    let mut covered = vec![false; m.n()];
    for (s, v) in m.entries() {
        if v != 0 {
            for p in s {
                covered[p] = true;
            }
        }
    }
    (0..m.n()).filter(|&p| !covered[p]).collect()
}

fn to_signed(m: &SignMap, tuple: &[(usize, bool)]) -> Vec<SignedElement> {
    tuple
        .iter()
        .map(|&(p, b)| SignedElement::new(m.label(p), b))
        .collect()
}

fn c3_witness(m: &SignMap) -> Option<Witness> {
    let r = m.rank();
    let nonzero: Vec<Vec<usize>> = m
        .entries()
        .filter(|(_, v)| *v != 0)
        .map(|(s, _)| s)
        .collect();
    let is_nonzero = |kept: &[usize], y: usize| -> bool {
        if kept.contains(&y) {
            return false;
        }
        let mut s: Vec<usize> = kept.to_vec();
        s.push(y);
        s.sort_unstable();
        m.value(&s) != 0
    };
    nonzero.par_iter().find_map_first(|x| {
        for drop in 0..r {
            let kept: Vec<usize> = x
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != drop)
                .map(|(_, &p)| p)
                .collect();
            for y in &nonzero {
                if !y.iter().any(|&yi| is_nonzero(&kept, yi)) {
                    let mut xt: Vec<(usize, bool)> = kept.iter().map(|&p| (p, false)).collect();
                    xt.push((x[drop], false));
                    let yt: Vec<(usize, bool)> = y.iter().map(|&p| (p, false)).collect();
                    return Some(Witness::Tuples(vec![to_signed(m, &xt), to_signed(m, &yt)]));
                }
            }
        }
        None
    })
}

fn c4_witness(m: &SignMap) -> Option<Witness> {
    let r = m.rank();
    if r < 2 {
        return None;
    }
    let n = m.n();
    let prefixes: Vec<Vec<usize>> = Subsets::new(n, r - 2).collect();
    prefixes.par_iter().find_map_first(|prefix| {
        let mut t: Vec<(usize, bool)> = prefix.iter().map(|&p| (p, false)).collect();
        t.push((0, false));
        t.push((0, false));
        let mut val = |u: usize, v: usize, bar_v: bool| -> i8 {
            t[r - 2] = (u, false);
            t[r - 1] = (v, bar_v);
            m.sign_at(&t)
        };
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let p1 = val(c, b, false) * val(a, d, false);
                        let p2 = val(d, b, false) * val(a, c, true);
                        let p3 = val(a, b, false) * val(c, d, false);
                        let bar_y1 = if p1 >= 0 && p2 >= 0 && p3 < 0 {
                            false
                        } else if p1 <= 0 && p2 <= 0 && p3 > 0 {
                            true
                        } else {
                            continue;
                        };
                        let mut x: Vec<(usize, bool)> =
                            prefix.iter().map(|&p| (p, false)).collect();
                        x.push((a, false));
                        x.push((b, false));
                        let y = vec![(c, bar_y1), (d, false)];
                        return Some(Witness::Tuples(vec![to_signed(m, &x), to_signed(m, &y)]));
                    }
                }
            }
        }
        None
    })
}
