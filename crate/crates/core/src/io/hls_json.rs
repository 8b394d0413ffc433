//! Hyperline sequences as JSON:
//!
//! ```text
//! {"rank":1,"elements":["1","~2"]}
//! {"rank":2,"atoms":[["1"],["2"],["~1"],["~2"]]}
//! {"rank":3,"hyperlines":[{"Y":{...},"Z":{...}}, ...]}
//! ```
//!
//! A `"ground"` array is written only when `E(X)` has elements that no
//! base mentions (loops).

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{OmError, Result};
use crate::hyperline::{HigherRank, Hls, Hyperline, Rank1, Rank2};
use crate::simplex::SignedElement;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Raw {
    rank: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    elements: Option<Vec<SignedElement>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    atoms: Option<Vec<Vec<SignedElement>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    hyperlines: Option<Vec<RawHyperline>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ground: Option<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawHyperline {
    #[serde(rename = "Y")]
    y: Node,
    #[serde(rename = "Z")]
    z: Node,
}

#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "Raw", into = "Raw")]
struct Node(Hls);

impl Serialize for SignedElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SignedElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn derived_ground(x: &Hls) -> BTreeSet<u32> {
    match x {
        Hls::Rank1(x) => x.chosen().iter().map(|e| e.element()).collect(),
        Hls::Rank2(x) => x.atoms().iter().flatten().map(|e| e.element()).collect(),
        Hls::Higher(x) => x
            .hyperlines()
            .iter()
            .flat_map(|h| h.y.ground().iter().chain(h.z.ground()).copied())
            .collect(),
    }
}

impl From<Node> for Raw {
    fn from(Node(x): Node) -> Raw {
        let ground =
            (derived_ground(&x) != *x.ground()).then(|| x.ground().iter().copied().collect());
        let mut raw = Raw {
            rank: x.rank(),
            elements: None,
            atoms: None,
            hyperlines: None,
            ground,
        };
        match x {
            Hls::Rank1(x) => raw.elements = Some(x.chosen().iter().copied().collect()),
            Hls::Rank2(x) => {
                raw.atoms = Some(
                    x.atoms()
                        .iter()
                        .map(|a| a.iter().copied().collect())
                        .collect(),
                )
            }
            Hls::Higher(x) => {
                raw.hyperlines = Some(
                    x.display_order()
                        .into_iter()
                        .map(|h| RawHyperline {
                            y: Node(h.y.clone()),
                            z: Node(Hls::Rank2(h.z.clone())),
                        })
                        .collect(),
                )
            }
        }
        raw
    }
}

impl TryFrom<Raw> for Node {
    type Error = String;

    fn try_from(raw: Raw) -> std::result::Result<Node, String> {
        let body_fields = [
            raw.elements.is_some(),
            raw.atoms.is_some(),
            raw.hyperlines.is_some(),
        ];
        if body_fields.iter().filter(|&&b| b).count() != 1 {
            return Err("expected exactly one of \"elements\", \"atoms\", \"hyperlines\"".into());
        }
        let x = match (raw.rank, raw.elements, raw.atoms, raw.hyperlines) {
            (0, ..) => return Err("rank must be at least 1".into()),
            (1, Some(elements), _, _) => {
                let chosen: BTreeSet<SignedElement> = elements.iter().copied().collect();
                if chosen.len() != elements.len() {
                    return Err("repeated element in rank-1 sequence".into());
                }
                Hls::Rank1(Rank1::from_chosen(chosen))
            }
            (2, _, Some(atoms), _) => {
                let atoms = atoms
                    .into_iter()
                    .map(|a| {
                        let set: BTreeSet<SignedElement> = a.iter().copied().collect();
                        if set.len() != a.len() {
                            Err("repeated element in an atom".to_string())
                        } else {
                            Ok(set)
                        }
                    })
                    .collect::<std::result::Result<Vec<_>, _>>()?;
                Hls::Rank2(Rank2::from_atoms(atoms))
            }
            (r, _, _, Some(hyperlines)) if r >= 3 => {
                let mut out = Vec::with_capacity(hyperlines.len());
                for h in hyperlines {
                    let z = match h.z.0 {
                        Hls::Rank2(z) => z,
                        other => {
                            return Err(format!("\"Z\" must have rank 2, got {}", other.rank()))
                        }
                    };
                    out.push(Hyperline { y: h.y.0, z });
                }
                Hls::Higher(HigherRank::from_hyperlines(r, out))
            }
            (r, ..) => {
                let want = match r {
                    1 => "elements",
                    2 => "atoms",
                    _ => "hyperlines",
                };
                return Err(format!("rank {r} requires \"{want}\""));
            }
        };
        Ok(Node(match raw.ground {
            None => x,
            Some(g) => with_ground(x, g.into_iter().collect())?,
        }))
    }
}

fn with_ground(x: Hls, ground: BTreeSet<u32>) -> std::result::Result<Hls, String> {
    if ground.contains(&0) {
        return Err("element ids start at 1".into());
    }
    if !derived_ground(&x).is_subset(&ground) {
        return Err("\"ground\" does not contain every listed element".into());
    }
    Ok(match x {
        Hls::Rank1(x) => Hls::Rank1(Rank1::new(ground, x.chosen().clone())),
        Hls::Rank2(x) => Hls::Rank2(Rank2::new(ground, x.atoms().to_vec())),
        Hls::Higher(x) => Hls::Higher(HigherRank::new(x.rank(), ground, x.hyperlines().to_vec())),
    })
}

pub fn parse(text: &str) -> Result<Hls> {
    serde_json::from_str::<Node>(text)
        .map(|n| n.0)
        .map_err(|e| OmError::parse(e.line().max(1), e.column().max(1), strip_position(&e)))
}

fn strip_position(e: &serde_json::Error) -> String {
    let s = e.to_string();
    match s.rfind(" at line ") {
        Some(i) => s[..i].to_string(),
        None => s,
    }
}

/// Canonical pretty-printed JSON with a trailing newline.
pub fn serialize(x: &Hls) -> String {
    let mut s = serde_json::to_string_pretty(&Node(x.clone())).expect("hyperline JSON");
    s.push('\n');
    s
}
