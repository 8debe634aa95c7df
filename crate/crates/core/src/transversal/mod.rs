//! Multipartite digraphs and their independent transversals.
//!
//! A [`PartedDigraph`] has `m` parts of `s` vertices each; vertex `x` lives in
//! part `x / s`. An independent transversal picks `fold` vertices from every
//! part with no arc (in either direction) between any two picks.
//!
//! * [`find_transversal_exact`] is a complete backtracking search.
//! * [`itl_transversal`] and [`itl_multifold`] construct transversals without
//!   search whenever the parts are large compared with the out-degree.
//! * [`rainbow_cut`] applies the construction to blocks of a colored complete
//!   multipartite graph.
//! * [`smd_construct`] builds the digraphs without transversals that bound
//!   `s(m, d)` from below, and [`scan_s3_d1`] settles `s(3, 1)` exhaustively.

mod exact;
mod itl;
mod rainbow;
mod smd;

use std::fmt::Write as _;

use rand::Rng;
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::graph::io::{data_lines, parse_fields};

pub use exact::find_transversal_exact;
pub use itl::{itl_multifold, itl_transversal, itl_transversal_traced, ItlTrace};
pub use rainbow::{rainbow_cut, verify_rainbow_cut, RainbowCutResult};
pub use smd::{scan_s3_d1, smd_construct, ExhaustiveScan, SmdRecord, SmdVariant};

/// Digraph on `m * s` vertices split into `m` equal parts; arcs never stay
/// inside a part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartedDigraph {
    m: usize,
    s: usize,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    delta_plus: usize,
    dropped_intra: usize,
}

impl PartedDigraph {
    /// Builds the digraph, silently merging repeated arcs. Arcs inside a
    /// part are discarded and counted in [`Self::dropped_intra`].
    pub fn new(m: usize, s: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if m == 0 || s == 0 {
            return Err(Error::InvalidInput(format!(
                "need m >= 1 and s >= 1, got m = {m}, s = {s}"
            )));
        }
        let order = m
            .checked_mul(s)
            .ok_or_else(|| Error::InvalidInput("m * s overflows".into()))?;
        let mut out = vec![Vec::new(); order];
        let mut dropped_intra = 0;
        for (u, v) in arcs {
            if u >= order || v >= order {
                return Err(Error::InvalidInput(format!("arc {u} -> {v} leaves 0..{order}")));
            }
            if u / s == v / s {
                dropped_intra += 1;
                continue;
            }
            out[u].push(v);
        }
        let mut inn = vec![Vec::new(); order];
        for (u, list) in out.iter_mut().enumerate() {
            list.sort_unstable();
            list.dedup();
            for &v in list.iter() {
                inn[v].push(u);
            }
        }
        let delta_plus = out.iter().map(Vec::len).max().unwrap_or(0);
        Ok(PartedDigraph {
            m,
            s,
            out,
            inn,
            delta_plus,
            dropped_intra,
        })
    }

    pub fn arcless(m: usize, s: usize) -> Result<Self> {
        PartedDigraph::new(m, s, std::iter::empty())
    }

    /// Every vertex gets `delta` out-neighbours drawn uniformly without
    /// replacement from the other parts.
    pub fn random<R: Rng + ?Sized>(m: usize, s: usize, delta: usize, rng: &mut R) -> Result<Self> {
        let others = (m.saturating_sub(1)) * s;
        if delta > others {
            return Err(Error::InvalidInput(format!(
                "out-degree {delta} exceeds the {others} vertices outside a part"
            )));
        }
        let mut arcs = Vec::with_capacity(m * s * delta);
        for u in 0..m * s {
            let own = u / s;
            for idx in rand::seq::index::sample(rng, others, delta) {
                // Skip over the vertices of u's own part.
                let v = if idx < own * s { idx } else { idx + s };
                arcs.push((u, v));
            }
        }
        PartedDigraph::new(m, s, arcs)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn order(&self) -> usize {
        self.m * self.s
    }

    #[inline]
    pub fn part(&self, x: usize) -> usize {
        x / self.s
    }

    pub fn part_range(&self, i: usize) -> std::ops::Range<usize> {
        i * self.s..(i + 1) * self.s
    }

    pub fn out(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn inn(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn delta_plus(&self) -> usize {
        self.delta_plus
    }

    /// Intra-part arcs that were supplied to the constructor and dropped.
    pub fn dropped_intra(&self) -> usize {
        self.dropped_intra
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].binary_search(&v).is_ok()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&v| (u, v)))
    }

    /// Parses `m s a` followed by `a` lines `u v`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = data_lines(text);
        let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header"))?;
        let [m, s, a] = parse_fields::<3>(hl, header)?;
        let mut arcs = Vec::with_capacity(a);
        for (ln, content) in lines {
            let [u, v] = parse_fields::<2>(ln, content)?;
            if u >= m * s || v >= m * s {
                return Err(Error::parse(ln, format!("vertex out of range 0..{}", m * s)));
            }
            arcs.push((u, v));
        }
        if arcs.len() != a {
            return Err(Error::parse(
                hl,
                format!("header announces {a} arcs, found {}", arcs.len()),
            ));
        }
        PartedDigraph::new(m, s, arcs)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {} {}", self.m, self.s, self.arc_count());
        for (u, v) in self.arcs() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

/// `fold` vertices from every part, listed part by part in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Transversal {
    pub fold: usize,
    pub chosen: Vec<Vec<usize>>,
}

impl Transversal {
    /// True when every part holds exactly `fold` distinct chosen vertices of
    /// its own and no arc joins two chosen vertices.
    pub fn verify(&self, d: &PartedDigraph) -> bool {
        if self.fold == 0 || self.chosen.len() != d.m() {
            return false;
        }
        let mut picked = vec![false; d.order()];
        for (i, part) in self.chosen.iter().enumerate() {
            if part.len() != self.fold {
                return false;
            }
            for &v in part {
                if v >= d.order() || d.part(v) != i || picked[v] {
                    return false;
                }
                picked[v] = true;
            }
        }
        d.arcs().all(|(u, v)| !(picked[u] && picked[v]))
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({ "fold": self.fold, "chosen": self.chosen })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ForbiddenScan {
    /// Two opposite arcs `u -> v` and `v -> u`.
    pub has_c2: bool,
    /// Two vertex-disjoint arcs touching four different parts.
    pub has_cross4_2k2: bool,
    /// Two arcs sharing a vertex and touching three different parts.
    pub has_cross3_p3: bool,
}

pub fn scan_forbidden_substructures(d: &PartedDigraph) -> ForbiddenScan {
    let has_c2 = d.arcs().any(|(u, v)| d.has_arc(v, u));
    let m = d.m();
    let mut pair = vec![false; m * m];
    for (u, v) in d.arcs() {
        let (a, b) = (d.part(u), d.part(v));
        pair[a.min(b) * m + a.max(b)] = true;
    }
    let pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|a| (a + 1..m).map(move |b| (a, b)))
        .filter(|&(a, b)| pair[a * m + b])
        .collect();
    let has_cross4_2k2 = pairs.iter().enumerate().any(|(i, &(a, b))| {
        pairs[i + 1..]
            .iter()
            .any(|&(c, e)| a != c && a != e && b != c && b != e)
    });
    let has_cross3_p3 = (0..d.order()).any(|v| {
        let mut parts = d.out(v).iter().chain(d.inn(v)).map(|&w| d.part(w));
        match parts.next() {
            Some(first) => parts.any(|p| p != first),
            None => false,
        }
    });
    ForbiddenScan {
        has_c2,
        has_cross4_2k2,
        has_cross3_p3,
    }
}
