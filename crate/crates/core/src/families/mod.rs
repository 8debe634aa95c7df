//! Graph families `F`: membership, chromatic caps and maximal members.

mod enumerate;
mod planarity;

pub use enumerate::{enumerate_maximal_members, for_each_maximal_member, for_each_member, MaximalMember};
pub use planarity::{is_outerplanar, is_planar};

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{degeneracy, is_k_colorable, SimpleGraph};

/// Vertex cap for the planarity-based families.
pub const PLANARITY_VERTEX_LIMIT: usize = 16;

/// A named graph family. Parameters are `>= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `{K_2}`: at most one edge.
    SingleEdge,
    Matchings,
    AtMostKEdges(usize),
    MaxDegree(usize),
    Planar,
    Outerplanar,
    Forests,
    LinearForests,
    Degenerate(usize),
    KColorable(usize),
    TriangleFree,
    /// Every non-isolated vertex has odd degree. Not closed under subgraphs.
    OddGraphs,
}

impl FamilySpec {
    pub fn new_checked(self) -> Result<Self> {
        use FamilySpec::*;
        match self {
            AtMostKEdges(0) | MaxDegree(0) | Degenerate(0) | KColorable(0) => {
                Err(Error::InvalidInput(format!("family parameter must be >= 1 in {self}")))
            }
            _ => Ok(self),
        }
    }

    pub fn is_hereditary(&self) -> bool {
        !matches!(self, FamilySpec::OddGraphs)
    }

    /// Exact membership of `h` (isolated vertices are irrelevant for every kind).
    pub fn contains(&self, h: &SimpleGraph) -> Result<bool> {
        use FamilySpec::*;
        Ok(match *self {
            SingleEdge => h.edge_count() <= 1,
            Matchings => h.max_degree() <= 1,
            AtMostKEdges(k) => h.edge_count() <= k,
            MaxDegree(t) => h.max_degree() <= t,
            Planar | Outerplanar => {
                if h.n() > PLANARITY_VERTEX_LIMIT {
                    return Err(Error::TooLarge {
                        what: "planarity input",
                        size: h.n(),
                        limit: PLANARITY_VERTEX_LIMIT,
                    });
                }
                if *self == Planar {
                    is_planar(h)
                } else {
                    is_outerplanar(h)
                }
            }
            Forests => h.is_acyclic(),
            LinearForests => h.max_degree() <= 2 && h.is_acyclic(),
            Degenerate(d) => degeneracy(h) <= d,
            KColorable(k) => is_k_colorable(h, k),
            TriangleFree => !h.has_triangle(),
            OddGraphs => (0..h.n()).all(|v| h.degree(v) == 0 || h.degree(v) % 2 == 1),
        })
    }

    /// Maximum chromatic number over all members, when bounded.
    pub fn chromatic_cap(&self) -> Option<usize> {
        use FamilySpec::*;
        match *self {
            SingleEdge | Matchings | Forests | LinearForests => Some(2),
            Outerplanar => Some(3),
            Planar => Some(4),
            Degenerate(d) => Some(d + 1),
            MaxDegree(t) => Some(t + 1),
            KColorable(k) => Some(k),
            AtMostKEdges(k) => {
                let mut q = 1;
                while (q + 1) * q / 2 <= k {
                    q += 1;
                }
                Some(q)
            }
            TriangleFree | OddGraphs => None,
        }
    }
}

/// Free-function form of [`FamilySpec::contains`].
pub fn family_contains(f: &FamilySpec, h: &SimpleGraph) -> Result<bool> {
    f.contains(h)
}

/// Free-function form of [`FamilySpec::chromatic_cap`].
pub fn family_chromatic_cap(f: &FamilySpec) -> Option<usize> {
    f.chromatic_cap()
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            SingleEdge => f.write_str("edge"),
            Matchings => f.write_str("matchings"),
            AtMostKEdges(k) => write!(f, "edges<={k}"),
            MaxDegree(t) => write!(f, "maxdeg<={t}"),
            Planar => f.write_str("planar"),
            Outerplanar => f.write_str("outerplanar"),
            Forests => f.write_str("forests"),
            LinearForests => f.write_str("linforests"),
            Degenerate(d) => write!(f, "degen<={d}"),
            KColorable(k) => write!(f, "chrom<={k}"),
            TriangleFree => f.write_str("trianglefree"),
            OddGraphs => f.write_str("odd"),
        }
    }
}

impl Serialize for FamilySpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        use FamilySpec::*;
        let lower = s.trim().to_ascii_lowercase();
        let bad = || Error::InvalidInput(format!("unknown family {s:?}"));
        let param = |prefix: &str| -> Option<Result<usize>> {
            lower
                .strip_prefix(prefix)
                .map(|rest| rest.trim().parse::<usize>().map_err(|_| bad()))
        };
        let spec = match lower.as_str() {
            "edge" => SingleEdge,
            "matchings" => Matchings,
            "planar" => Planar,
            "outerplanar" => Outerplanar,
            "forests" => Forests,
            "linforests" => LinearForests,
            "trianglefree" => TriangleFree,
            "odd" => OddGraphs,
            _ => {
                if let Some(k) = param("edges<=") {
                    AtMostKEdges(k?)
                } else if let Some(t) = param("maxdeg<=") {
                    MaxDegree(t?)
                } else if let Some(d) = param("degen<=") {
                    Degenerate(d?)
                } else if let Some(k) = param("chrom<=") {
                    KColorable(k?)
                } else {
                    return Err(bad());
                }
            }
        };
        spec.new_checked()
    }
}
