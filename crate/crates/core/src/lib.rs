//! Oriented matroids in exact arithmetic.
//!
//! Two equivalent encodings are provided: chirotopes ([`SignMap`] /
//! [`Chirotope`]) and hyperline sequences ([`Hls`]), with conversion in both
//! directions, minors, realization from rational vector configurations, and
//! a combinatorial face census of the associated sphere arrangement.

pub mod arrangement;
pub mod chirotope;
pub mod cli;
pub mod covector;
pub mod enumerate;
pub mod error;
pub mod exact;
pub mod fm;
pub mod hyperline;
pub mod io;
pub mod limits;
pub mod report;
pub mod simplex;
pub mod svg;

pub use chirotope::{Chirotope, FullClass, SignMap};
pub use error::{OmError, Result};
pub use hyperline::Hls;
pub use limits::Limits;
pub use report::{Axiom, ValidationReport, Violation};
pub use simplex::{CanonicalBasis, GroundSet, Normalized, SignedElement};
