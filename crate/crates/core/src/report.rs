use std::fmt;

use crate::simplex::{fmt_tuple, SignedElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    C1,
    C3,
    C4,
    H1,
    H2,
    H3,
    H4,
    /// Rank-1 / rank-2 well-formedness and other shape requirements.
    Structure,
    /// Two bases on the same support with opposite signs.
    Consistency,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::C1 => "C1",
            Axiom::C3 => "C3",
            Axiom::C4 => "C4",
            Axiom::H1 => "H1",
            Axiom::H2 => "H2",
            Axiom::H3 => "H3",
            Axiom::H4 => "H4",
            Axiom::Structure => "structure",
            Axiom::Consistency => "consistency",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Element(u32),
    Tuples(Vec<Vec<SignedElement>>),
    Text(String),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Element(e) => write!(f, "element {e}"),
            Witness::Tuples(ts) => {
                let parts: Vec<String> = ts.iter().map(|t| fmt_tuple(t)).collect();
                write!(f, "{}", parts.join(" "))
            }
            Witness::Text(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Witness,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violated, witness {}", self.axiom, self.witness)
    }
}

/// Outcome of an axiom check. Empty `violations` means the input is valid;
/// `notes` carry non-fatal remarks.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, axiom: Axiom, witness: Witness) {
        self.violations.push(Violation { axiom, witness });
    }

    pub fn violates(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    pub(crate) fn absorb(&mut self, prefix: &str, other: ValidationReport) {
        for v in other.violations {
            let witness = match v.witness {
                Witness::Text(t) => Witness::Text(format!("{prefix}: {t}")),
                w => Witness::Text(format!("{prefix}: {w}")),
            };
            self.violations.push(Violation {
                axiom: v.axiom,
                witness,
            });
        }
        self.notes
            .extend(other.notes.into_iter().map(|n| format!("{prefix}: {n}")));
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            writeln!(f, "valid")?;
        }
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        Ok(())
    }
}
