//! Structural checks and axioms H1-H4.

use std::collections::{BTreeMap, BTreeSet};

use super::{HigherRank, Hls, Rank1, Rank2};
use crate::error::{OmError, Result};
use crate::limits::Limits;
use crate::report::{Axiom, ValidationReport, Witness};
use crate::simplex::{fmt_tuple, normalize, Normalized, SignedElement};

pub fn check_hyperline(x: &Hls) -> Result<ValidationReport> {
    check_hyperline_with(x, &Limits::default())
}

pub fn check_hyperline_with(x: &Hls, limits: &Limits) -> Result<ValidationReport> {
    if x.ground().len() > limits.max_n || x.rank() > limits.max_rank {
        return Err(OmError::SizeGuard(format!(
            "hyperline check limited to n <= {} and r <= {} (got n={}, r={})",
            limits.max_n,
            limits.max_rank,
            x.ground().len(),
            x.rank()
        )));
    }
    let mut report = ValidationReport::default();
    check_into(x, &mut report);
    Ok(report)
}

fn check_into(x: &Hls, report: &mut ValidationReport) {
    match x {
        Hls::Rank1(x) => check_rank1(x, report),
        Hls::Rank2(x) => check_rank2(x, report),
        Hls::Higher(x) => check_higher(x, report),
    }
}

fn text(s: impl Into<String>) -> Witness {
    Witness::Text(s.into())
}

fn fmt_set(s: &BTreeSet<SignedElement>) -> String {
    let parts: Vec<String> = s.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn check_rank1(x: &Rank1, report: &mut ValidationReport) {
    if x.chosen().is_empty() {
        report.push(Axiom::Structure, text("rank-1 sequence is empty"));
        return;
    }
    let under: BTreeSet<u32> = x.chosen().iter().map(|s| s.element()).collect();
    if under.len() != x.chosen().len() {
        report.push(
            Axiom::Structure,
            text(format!(
                "rank-1 sequence {} contains an element and its bar",
                fmt_set(x.chosen())
            )),
        );
    }
    if &under != x.ground() {
        let missing: Vec<String> = x
            .ground()
            .difference(&under)
            .map(|e| e.to_string())
            .collect();
        let extra: Vec<String> = under
            .difference(x.ground())
            .map(|e| e.to_string())
            .collect();
        report.push(
            Axiom::Structure,
            text(format!(
                "rank-1 sequence does not cover its ground set (missing [{}], foreign [{}])",
                missing.join(","),
                extra.join(",")
            )),
        );
    }
}

fn check_rank2(x: &Rank2, report: &mut ValidationReport) {
    let len = x.period();
    if len < 2 || !len.is_multiple_of(2) {
        report.push(
            Axiom::Structure,
            text(format!("rank-2 period {len} is not a positive even number")),
        );
        return;
    }
    let k = len / 2;
    if k == 1 {
        report
            .notes
            .push("degenerate period: all elements are parallel (k = 1)".into());
    }
    for (a, atom) in x.atoms().iter().enumerate() {
        if atom.is_empty() {
            report.push(Axiom::Structure, text(format!("atom {a} is empty")));
            continue;
        }
        let under: BTreeSet<u32> = atom.iter().map(|s| s.element()).collect();
        if under.len() != atom.len() {
            report.push(
                Axiom::Structure,
                text(format!(
                    "atom {a} {} contains an element and its bar",
                    fmt_set(atom)
                )),
            );
        }
        let opposite = &x.atoms()[(a + k) % len];
        let barred: BTreeSet<SignedElement> = atom.iter().map(|s| s.involute()).collect();
        if &barred != opposite {
            report.push(
                Axiom::Structure,
                text(format!(
                    "antipodality: atom {} is {} but the negation of atom {a} is {}",
                    (a + k) % len,
                    fmt_set(opposite),
                    fmt_set(&barred)
                )),
            );
            break;
        }
    }
    let mut count: BTreeMap<SignedElement, usize> = BTreeMap::new();
    for s in x.atoms().iter().flatten() {
        *count.entry(*s).or_default() += 1;
    }
    for e in x.ground() {
        for s in [SignedElement::pos(*e), SignedElement::neg(*e)] {
            match count.get(&s).copied().unwrap_or(0) {
                1 => {}
                0 => report.push(Axiom::Structure, text(format!("{s} appears in no atom"))),
                c => report.push(Axiom::Structure, text(format!("{s} appears in {c} atoms"))),
            }
        }
    }
    for s in count.keys() {
        if !x.ground().contains(&s.element()) {
            report.push(
                Axiom::Structure,
                text(format!("{s} is outside the ground set")),
            );
        }
    }
}

fn check_higher(x: &HigherRank, report: &mut ValidationReport) {
    let r = x.rank();
    if r < 3 {
        report.push(Axiom::Structure, text(format!("hyperline set of rank {r}")));
        return;
    }
    if x.hyperlines().is_empty() {
        report.push(Axiom::Structure, text("no hyperlines"));
        return;
    }
    for (i, h) in x.hyperlines().iter().enumerate() {
        if h.y.rank() != r - 2 {
            report.push(
                Axiom::Structure,
                text(format!(
                    "hyperline {i}: Y has rank {}, expected {}",
                    h.y.rank(),
                    r - 2
                )),
            );
            continue;
        }
        let mut sub = ValidationReport::default();
        check_into(&h.y, &mut sub);
        check_rank2(&h.z, &mut sub);
        report.absorb(&format!("hyperline {i}"), sub);

        let ey = h.y.ground();
        let ez = h.z.ground();
        let union: BTreeSet<u32> = ey.union(ez).copied().collect();
        if let Some(e) = ey.intersection(ez).next() {
            report.push(
                Axiom::H1,
                text(format!(
                    "hyperline {i}: element {e} lies in both E(Y) and E(Z)"
                )),
            );
        } else if &union != x.ground() {
            report.push(
                Axiom::H1,
                text(format!(
                    "hyperline {i}: E(Y) and E(Z) do not partition E(X)"
                )),
            );
        }
    }
    if !report.is_valid() {
        // H2-H4 are only meaningful over well-formed hyperlines
        return;
    }

    // H2
    'h2: for (i, h1) in x.hyperlines().iter().enumerate() {
        let ybases = h1.y.positive_tuples();
        for (j, h2) in x.hyperlines().iter().enumerate() {
            if i == j {
                continue;
            }
            let Some(base) = ybases
                .iter()
                .find(|t| t.iter().all(|s| h2.y.ground().contains(&s.element())))
            else {
                continue;
            };
            if h1 != h2 && *h1 != h2.negated() {
                report.push(
                    Axiom::H2,
                    text(format!(
                        "base {} of Y in hyperline {i} lies in E(Y) of hyperline {j}",
                        fmt_tuple(base)
                    )),
                );
                break 'h2;
            }
        }
    }

    let tuples = x.positive_tuples();

    // consistency of canonical signs
    let mut signs: BTreeMap<Vec<u32>, (i8, usize)> = BTreeMap::new();
    for (i, t) in tuples.iter().enumerate() {
        if let Normalized::Basis(b) = normalize(t) {
            match signs.get(&b.support) {
                Some(&(s, j)) if s != b.sign => {
                    report.push(
                        Axiom::Consistency,
                        Witness::Tuples(vec![tuples[j].clone(), t.clone()]),
                    );
                    break;
                }
                Some(_) => {}
                None => {
                    signs.insert(b.support, (b.sign, i));
                }
            }
        }
    }

    // H3: for a fixed prefix only the supports of the second base matter
    let mut supports: BTreeMap<Vec<u32>, &Vec<SignedElement>> = BTreeMap::new();
    for t in &tuples {
        let mut s: Vec<u32> = t.iter().map(|x| x.element()).collect();
        s.sort_unstable();
        supports.entry(s).or_insert(t);
    }
    let mut prefixes: BTreeMap<&[SignedElement], &Vec<SignedElement>> = BTreeMap::new();
    for t in &tuples {
        prefixes.entry(&t[..r - 1]).or_insert(t);
    }
    'h3: for (prefix, xt) in &prefixes {
        let mut probe: Vec<SignedElement> = prefix.to_vec();
        probe.push(SignedElement::pos(0));
        let reachable: BTreeSet<u32> = x
            .ground()
            .iter()
            .copied()
            .filter(|&e| {
                [SignedElement::pos(e), SignedElement::neg(e)]
                    .into_iter()
                    .any(|s| {
                        probe[r - 1] = s;
                        x.is_positive_base(&probe)
                    })
            })
            .collect();
        for (support, yt) in &supports {
            if !support.iter().any(|e| reachable.contains(e)) {
                report.push(
                    Axiom::H3,
                    Witness::Tuples(vec![(*xt).clone(), (*yt).clone()]),
                );
                break 'h3;
            }
        }
    }

    // H4
    for t in &tuples {
        let mut moved = t[..r - 3].to_vec();
        moved.push(t[r - 2].involute());
        moved.push(t[r - 3]);
        moved.push(t[r - 1]);
        if !x.is_positive_base(&moved) {
            report.push(Axiom::H4, Witness::Tuples(vec![t.clone(), moved]));
            break;
        }
    }
}
