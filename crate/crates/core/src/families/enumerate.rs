use std::ops::ControlFlow;

use serde::Serialize;

use super::FamilySpec;
use crate::error::{Budget, Error, Result};
use crate::graph::{Edge, SimpleGraph};

/// An inclusion-maximal edge set `S` of a host with `host[S]` in the family.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MaximalMember {
    pub edges: Vec<Edge>,
}

impl MaximalMember {
    /// Re-checks membership and maximality against `host`.
    pub fn verify(&self, f: &FamilySpec, host: &SimpleGraph) -> Result<bool> {
        let mut sub = host.spanning_subgraph(&self.edges)?;
        if !f.contains(&sub)? {
            return Ok(false);
        }
        for e in host.edges() {
            if sub.has_edge(e.u, e.v) {
                continue;
            }
            sub.add_edge(e.u, e.v);
            let grows = f.contains(&sub)?;
            sub.remove_edge(e.u, e.v);
            if grows {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

struct Walker<'a, V> {
    family: &'a FamilySpec,
    edges: Vec<Edge>,
    current: SimpleGraph,
    chosen: Vec<Edge>,
    /// Edges that fit when they were skipped; a maximal leaf must block them all.
    skipped: Vec<Edge>,
    budget: &'a mut Budget,
    yielded: u64,
    maximal_only: bool,
    visit: V,
}

impl<V: FnMut(&[Edge]) -> ControlFlow<()>> Walker<'_, V> {
    fn fits(&mut self, e: Edge) -> Result<bool> {
        self.current.add_edge(e.u, e.v);
        let ok = self.family.contains(&self.current);
        self.current.remove_edge(e.u, e.v);
        ok
    }

    fn leaf(&mut self) -> Result<ControlFlow<()>> {
        if self.maximal_only {
            for i in 0..self.skipped.len() {
                if self.fits(self.skipped[i])? {
                    return Ok(ControlFlow::Continue(()));
                }
            }
        }
        self.yielded += 1;
        Ok((self.visit)(&self.chosen))
    }

    fn walk(&mut self, i: usize) -> Result<ControlFlow<()>> {
        self.budget.tick(self.yielded)?;
        if i == self.edges.len() {
            return self.leaf();
        }
        let e = self.edges[i];
        let fits = self.fits(e)?;
        if fits {
            self.current.add_edge(e.u, e.v);
            self.chosen.push(e);
            let flow = self.walk(i + 1)?;
            self.chosen.pop();
            self.current.remove_edge(e.u, e.v);
            if flow.is_break() {
                return Ok(flow);
            }
            if self.maximal_only {
                self.skipped.push(e);
            }
        }
        let flow = self.walk(i + 1)?;
        if fits && self.maximal_only {
            self.skipped.pop();
        }
        Ok(flow)
    }
}

fn run<V: FnMut(&[Edge]) -> ControlFlow<()>>(
    f: &FamilySpec,
    host: &SimpleGraph,
    budget: &mut Budget,
    maximal_only: bool,
    visit: V,
) -> Result<u64> {
    if !f.is_hereditary() {
        return Err(Error::Unsupported(format!(
            "member enumeration requires a hereditary family; {f} is not"
        )));
    }
    let mut w = Walker {
        family: f,
        edges: host.edges(),
        current: SimpleGraph::empty(host.n())?,
        chosen: Vec::new(),
        skipped: Vec::new(),
        budget,
        yielded: 0,
        maximal_only,
        visit,
    };
    let _ = w.walk(0)?;
    Ok(w.yielded)
}

/// Streams every inclusion-maximal member of `f` inside `host`, each once, in
/// lexicographic order of edge indices. Returns the number visited.
pub fn for_each_maximal_member<V>(f: &FamilySpec, host: &SimpleGraph, budget: &mut Budget, visit: V) -> Result<u64>
where
    V: FnMut(&[Edge]) -> ControlFlow<()>,
{
    run(f, host, budget, true, visit)
}

/// Streams every edge set of `host` (the empty one included) that spans a
/// member of `f`.
pub fn for_each_member<V>(f: &FamilySpec, host: &SimpleGraph, budget: &mut Budget, visit: V) -> Result<u64>
where
    V: FnMut(&[Edge]) -> ControlFlow<()>,
{
    run(f, host, budget, false, visit)
}

pub fn enumerate_maximal_members(
    f: &FamilySpec,
    host: &SimpleGraph,
    budget: &mut Budget,
) -> Result<Vec<MaximalMember>> {
    let mut out = Vec::new();
    for_each_maximal_member(f, host, budget, |edges| {
        out.push(MaximalMember { edges: edges.to_vec() });
        ControlFlow::Continue(())
    })?;
    Ok(out)
}
