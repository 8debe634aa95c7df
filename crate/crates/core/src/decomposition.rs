//! Decks `D(G|F)`, the reduced chromatic number `chi_F(G)`, stability with
//! respect to `F`, and minimum `F`-decomposition sizes.

use std::collections::HashMap;
use std::ops::ControlFlow;

use serde::Serialize;
use serde_json::json;

use crate::error::{Budget, Error, Result};
use crate::families::{for_each_maximal_member, for_each_member, FamilySpec, MaximalMember};
use crate::graph::{bits, chromatic_index, chromatic_number, is_isomorphic, optimal_coloring, Edge, SimpleGraph};

/// Which deleted subgraphs `D` generate the deck.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DeckScope {
    /// Every nonempty member `D` of `F` inside `G`.
    AllMembers,
    /// Only inclusion-maximal members; yields the subgraph-minimal deck
    /// graphs, which is all that minimization and avoidance need.
    MaximalMembers,
}

#[derive(Debug, Clone)]
pub struct Deck {
    pub host: SimpleGraph,
    pub family: FamilySpec,
    pub scope: DeckScope,
    /// Each member keeps the vertex set of the host.
    pub members: Vec<SimpleGraph>,
    pub deduped: bool,
}

fn degree_signature(g: &SimpleGraph) -> (usize, Vec<usize>) {
    let mut d: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    d.sort_unstable();
    (g.edge_count(), d)
}

/// Keeps the first representative of every isomorphism class, in input order.
pub fn dedupe_isomorphic(graphs: Vec<SimpleGraph>) -> Result<Vec<SimpleGraph>> {
    let mut classes: HashMap<(usize, Vec<usize>), Vec<usize>> = HashMap::new();
    let mut out: Vec<SimpleGraph> = Vec::new();
    for g in graphs {
        let bucket = classes.entry(degree_signature(&g)).or_default();
        let mut fresh = true;
        for &i in bucket.iter() {
            if is_isomorphic(&out[i], &g)? {
                fresh = false;
                break;
            }
        }
        if fresh {
            bucket.push(out.len());
            out.push(g);
        }
    }
    Ok(out)
}

/// The `F`-deck of `G` over every nonempty member `D`.
pub fn deck(g: &SimpleGraph, f: &FamilySpec, dedupe: bool, budget: &mut Budget) -> Result<Deck> {
    deck_with_scope(g, f, DeckScope::AllMembers, dedupe, budget)
}

pub fn deck_with_scope(
    g: &SimpleGraph,
    f: &FamilySpec,
    scope: DeckScope,
    dedupe: bool,
    budget: &mut Budget,
) -> Result<Deck> {
    let mut members = Vec::new();
    let mut collect = |edges: &[Edge]| {
        if !edges.is_empty() || g.edge_count() == 0 {
            let mut h = g.clone();
            for e in edges {
                h.remove_edge(e.u, e.v);
            }
            members.push(h);
        }
        ControlFlow::Continue(())
    };
    match scope {
        DeckScope::AllMembers => for_each_member(f, g, budget, &mut collect)?,
        DeckScope::MaximalMembers => for_each_maximal_member(f, g, budget, &mut collect)?,
    };
    if dedupe {
        members = dedupe_isomorphic(members)?;
    }
    Ok(Deck {
        host: g.clone(),
        family: *f,
        scope,
        members,
        deduped: dedupe,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Bounded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReducedChromaticResult {
    /// Set exactly when `lo == hi`.
    pub value: Option<usize>,
    pub lo: usize,
    pub hi: usize,
    pub exact: bool,
    /// A member `D` with `chi(G - D) = hi`.
    pub witness: MaximalMember,
}

impl ReducedChromaticResult {
    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<[usize; 2]> = self.witness.edges.iter().map(|e| [e.u, e.v]).collect();
        json!({
            "value": self.value,
            "lo": self.lo,
            "hi": self.hi,
            "exact": self.exact,
            "witness_edges": edges,
        })
    }

    /// Re-derives `hi` from the witness alone.
    pub fn verify(&self, g: &SimpleGraph, f: &FamilySpec) -> Result<bool> {
        let sub = g.spanning_subgraph(&self.witness.edges)?;
        if !f.contains(&sub)? {
            return Ok(false);
        }
        let rest = g.delete_edges(&self.witness.edges)?;
        Ok(chromatic_number(&rest) == self.hi && self.lo <= self.hi && self.exact == (self.lo == self.hi))
    }
}

/// Adds host edges in order while the member stays in `F`.
fn extend_greedily(f: &FamilySpec, g: &SimpleGraph, start: &[Edge]) -> Result<Vec<Edge>> {
    let mut cur = g.spanning_subgraph(start)?;
    let mut out = start.to_vec();
    for e in g.edges() {
        if cur.has_edge(e.u, e.v) {
            continue;
        }
        cur.add_edge(e.u, e.v);
        if f.contains(&cur)? {
            out.push(e);
        } else {
            cur.remove_edge(e.u, e.v);
        }
    }
    out.sort();
    Ok(out)
}

/// Structured deletions: take an optimal coloring, group its color classes
/// into chunks of `c` consecutive colors and delete every edge inside a chunk.
/// `G - D` is then `ceil(chi/c)`-colorable. On `K_p` this deletes vertex-disjoint
/// cliques of order at most `c`.
fn chunk_candidates(f: &FamilySpec, g: &SimpleGraph) -> Result<Vec<Vec<Edge>>> {
    let coloring = optimal_coloring(g);
    let chi = coloring.iter().map(|&c| c + 1).max().unwrap_or(0);
    let mut out = Vec::new();
    for c in 2..=chi {
        let mut chunk_mask = vec![0u64; chi.div_ceil(c)];
        for (v, &col) in coloring.iter().enumerate() {
            chunk_mask[col / c] |= 1u64 << v;
        }
        let deleted: Vec<Edge> = g
            .edges()
            .into_iter()
            .filter(|e| chunk_mask.iter().any(|&m| m >> e.u & 1 == 1 && m >> e.v & 1 == 1))
            .collect();
        if f.contains(&g.spanning_subgraph(&deleted)?)? {
            out.push(deleted);
        }
    }
    Ok(out)
}

fn lower_bound(chi: usize, g_in_f: bool, cap: Option<usize>) -> usize {
    if chi == 0 {
        return 0;
    }
    if g_in_f {
        return 1;
    }
    let cap_bound = cap.map_or(1, |c| chi.div_ceil(c));
    cap_bound.max(2).min(chi)
}

struct Best {
    hi: usize,
    witness: Vec<Edge>,
}

fn consider(g: &SimpleGraph, edges: Vec<Edge>, best: &mut Option<Best>, memo: &mut HashMap<SimpleGraph, usize>) {
    let mut rest = g.clone();
    for e in &edges {
        rest.remove_edge(e.u, e.v);
    }
    let chi = *memo.entry(rest).or_insert_with_key(chromatic_number);
    if best.as_ref().is_none_or(|b| chi < b.hi) {
        *best = Some(Best {
            hi: chi,
            witness: edges,
        });
    }
}

pub fn reduced_chromatic(
    g: &SimpleGraph,
    f: &FamilySpec,
    mode: Mode,
    budget: &mut Budget,
) -> Result<ReducedChromaticResult> {
    reduced_chromatic_with_candidates(g, f, mode, &[], budget)
}

/// `chi_F(G) = min chi(G - D)` over members `D` of `F` inside `G`.
///
/// Exact mode enumerates maximal members (deleting more edges never raises
/// the chromatic number) and stops as soon as the lower bound
/// `max(2, ceil(chi(G)/cap))` is attained. Bounded mode evaluates only the
/// structured candidates plus `extra` and reports `[lo, hi]`.
pub fn reduced_chromatic_with_candidates(
    g: &SimpleGraph,
    f: &FamilySpec,
    mode: Mode,
    extra: &[Vec<Edge>],
    budget: &mut Budget,
) -> Result<ReducedChromaticResult> {
    let chi = chromatic_number(g);
    let g_in_f = f.contains(g)?;
    if g_in_f {
        let all = g.edges();
        return Ok(ReducedChromaticResult {
            value: Some(chi.min(1)),
            lo: chi.min(1),
            hi: chi.min(1),
            exact: true,
            witness: MaximalMember { edges: all },
        });
    }
    let cap = f.chromatic_cap();
    let lo = lower_bound(chi, g_in_f, cap);
    if mode == Mode::Exact && !f.is_hereditary() {
        return Err(Error::Unsupported(format!(
            "exact mode needs a hereditary family; {f} is not"
        )));
    }
    if mode == Mode::Bounded && cap.is_none() && extra.is_empty() {
        return Err(Error::Unsupported(format!(
            "bounded mode for {f} needs a chromatic cap or candidate deletions"
        )));
    }

    let mut memo = HashMap::new();
    let mut best: Option<Best> = None;
    for cand in extra {
        if !f.contains(&g.spanning_subgraph(cand)?)? {
            return Err(Error::InvalidInput(
                "candidate deletion is not a member of the family".into(),
            ));
        }
        let full = if f.is_hereditary() {
            extend_greedily(f, g, cand)?
        } else {
            cand.clone()
        };
        consider(g, full, &mut best, &mut memo);
    }
    if f.is_hereditary() {
        consider(g, extend_greedily(f, g, &[])?, &mut best, &mut memo);
        for cand in chunk_candidates(f, g)? {
            consider(g, extend_greedily(f, g, &cand)?, &mut best, &mut memo);
        }
    }

    let reached = |b: &Option<Best>| b.as_ref().is_some_and(|b| b.hi <= lo);
    if mode == Mode::Exact && !reached(&best) {
        for_each_maximal_member(f, g, budget, |edges| {
            consider(g, edges.to_vec(), &mut best, &mut memo);
            if reached(&best) {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })?;
    }
    let best = best.ok_or_else(|| Error::Invariant("no candidate deletion evaluated".into()))?;
    let (lo, exact) = match mode {
        // A completed enumeration pins the value regardless of the lower bound.
        Mode::Exact => (best.hi, true),
        Mode::Bounded => (lo, lo == best.hi),
    };
    Ok(ReducedChromaticResult {
        value: exact.then_some(best.hi),
        lo,
        hi: best.hi,
        exact,
        witness: MaximalMember { edges: best.witness },
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilityReport {
    pub stable: bool,
    pub chi: usize,
    pub chi_f: usize,
    /// A member `D` with `chi(G - D) < chi(G)`, present iff unstable.
    pub critical_witness: Option<MaximalMember>,
}

impl StabilityReport {
    pub fn verify(&self, g: &SimpleGraph, f: &FamilySpec) -> Result<bool> {
        if chromatic_number(g) != self.chi || self.stable != (self.chi == self.chi_f) {
            return Ok(false);
        }
        match &self.critical_witness {
            None => Ok(self.stable),
            Some(w) => {
                let d = g.spanning_subgraph(&w.edges)?;
                let rest = g.delete_edges(&w.edges)?;
                Ok(!self.stable && f.contains(&d)? && chromatic_number(&rest) < self.chi)
            }
        }
    }
}

pub fn is_stable(g: &SimpleGraph, f: &FamilySpec, budget: &mut Budget) -> Result<StabilityReport> {
    let chi = chromatic_number(g);
    let r = reduced_chromatic(g, f, Mode::Exact, budget)?;
    let chi_f = r.hi;
    let stable = chi_f == chi;
    Ok(StabilityReport {
        stable,
        chi,
        chi_f,
        critical_witness: (!stable).then_some(r.witness),
    })
}

/// Largest vertex count for the subset scan behind arboricity.
pub const ARBORICITY_VERTEX_LIMIT: usize = 20;

/// Nash-Williams: the maximum of `ceil(e(H) / (|H| - 1))` over vertex subsets.
pub fn arboricity(g: &SimpleGraph) -> Result<usize> {
    let n = g.n();
    if n > ARBORICITY_VERTEX_LIMIT {
        return Err(Error::TooLarge {
            what: "arboricity input",
            size: n,
            limit: ARBORICITY_VERTEX_LIMIT,
        });
    }
    let mut best = 0;
    for mask in 1u64..(1u64 << n) {
        let k = mask.count_ones() as usize;
        if k < 2 {
            continue;
        }
        let e: usize = bits(mask)
            .map(|v| (g.neighbors(v) & mask).count_ones() as usize)
            .sum::<usize>()
            / 2;
        best = best.max(e.div_ceil(k - 1));
    }
    Ok(best)
}

/// Minimum number of members of `F` decomposing `E(G)`, for the kinds where
/// that is a classical invariant.
pub fn min_decomposition_size(g: &SimpleGraph, f: &FamilySpec) -> Result<usize> {
    let m = g.edge_count();
    match *f {
        FamilySpec::SingleEdge => Ok(m),
        FamilySpec::AtMostKEdges(k) => Ok(m.div_ceil(k)),
        FamilySpec::Matchings => chromatic_index(g),
        FamilySpec::Forests => arboricity(g),
        FamilySpec::Planar => Err(Error::Unsupported(
            "planar decompositions (thickness) are not computed".into(),
        )),
        other => Err(Error::Unsupported(format!("minimum decomposition size for {other}"))),
    }
}
