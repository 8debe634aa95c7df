//! Executable anti-Ramsey decomposition theory for small graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`] holds the bitmask graph type and the exact structural
//!   computations (chromatic number, isomorphism, subgraph search).
//! * [`families`] defines hereditary graph families and enumerates their
//!   maximal members inside a host.
//! * [`decomposition`] computes decks, reduced chromatic numbers and
//!   stability reports.
//! * [`transversal`] contains the constructive independent transversal and
//!   rainbow cut algorithms together with the `s(m,d)` constructions.
//! * [`extremal`] has Turán numbers, the deck lower-bound coloring, the
//!   F-colored copy search, the exact forcing-number solver and the
//!   asymptotic classifier.
//!
//! Every nontrivial answer comes with a certificate that can be re-checked
//! without trusting the search that produced it.

pub mod decomposition;
pub mod error;
pub mod extremal;
pub mod families;
pub mod graph;
pub mod transversal;

pub use error::{Error, Result};
pub use families::FamilySpec;
pub use graph::{Edge, SimpleGraph};
