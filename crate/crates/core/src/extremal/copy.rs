//! Search for a copy of `G` whose color classes all belong to `F`.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::json;

use super::EdgeColoring;
use crate::error::{Budget, Error, Result};
use crate::families::FamilySpec;
use crate::graph::{bits, Edge, SimpleGraph};

/// An `F`-colored copy: `map[x]` is the host vertex of pattern vertex `x`,
/// and each color seen on the image lists the pattern edges it covers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbeddingCertificate {
    pub map: Vec<usize>,
    pub class_decomposition: Vec<(usize, Vec<Edge>)>,
}

impl EmbeddingCertificate {
    /// Re-derives the color classes from `psi` and re-checks injectivity and
    /// family membership.
    pub fn verify(&self, psi: &EdgeColoring, g: &SimpleGraph, f: &FamilySpec) -> Result<bool> {
        if self.map.len() != g.n() {
            return Ok(false);
        }
        let mut used = vec![false; psi.n()];
        for &h in &self.map {
            if h >= psi.n() || used[h] {
                return Ok(false);
            }
            used[h] = true;
        }
        let classes = classes_of(psi, g, &self.map);
        if classes != self.class_decomposition {
            return Ok(false);
        }
        for (_, edges) in &classes {
            if !f.contains(&g.spanning_subgraph(edges)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "map": self.map,
            "classes": self
                .class_decomposition
                .iter()
                .map(|(c, es)| json!({ "color": c, "edges": es.iter().map(|e| [e.u, e.v]).collect::<Vec<_>>() }))
                .collect::<Vec<_>>(),
        })
    }
}

fn classes_of(psi: &EdgeColoring, g: &SimpleGraph, map: &[usize]) -> Vec<(usize, Vec<Edge>)> {
    let mut by_color: BTreeMap<usize, Vec<Edge>> = BTreeMap::new();
    for e in g.edges() {
        by_color.entry(psi.color(map[e.u], map[e.v])).or_default().push(e);
    }
    by_color.into_iter().collect()
}

struct CopySearch<'a> {
    psi: &'a EdgeColoring,
    g: &'a SimpleGraph,
    f: &'a FamilySpec,
    order: Vec<usize>,
    map: Vec<usize>,
    used: u64,
    /// Pattern edges currently carrying each color, as graphs on `V(G)`.
    classes: Vec<SimpleGraph>,
    prune: bool,
    budget: &'a mut Budget,
}

impl CopySearch<'_> {
    fn extend(&mut self, depth: usize) -> Result<bool> {
        self.budget.tick(depth as u64)?;
        if depth == self.order.len() {
            if !self.prune {
                for class in &self.classes {
                    if class.edge_count() > 0 && !self.f.contains(class)? {
                        return Ok(false);
                    }
                }
            }
            return Ok(true);
        }
        let x = self.order[depth];
        let back: Vec<usize> = bits(self.g.neighbors(x))
            .filter(|&y| self.map[y] != usize::MAX)
            .collect();
        for h in 0..self.psi.n() {
            if self.used >> h & 1 == 1 {
                continue;
            }
            let mut touched: Vec<usize> = Vec::with_capacity(back.len());
            for &y in &back {
                let c = self.psi.color(h, self.map[y]);
                self.classes[c].add_edge(x, y);
                touched.push(c);
            }
            touched.sort_unstable();
            touched.dedup();
            let mut ok = true;
            if self.prune {
                for &c in &touched {
                    if !self.f.contains(&self.classes[c])? {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                self.map[x] = h;
                self.used |= 1u64 << h;
                let found = self.extend(depth + 1)?;
                if found {
                    return Ok(true);
                }
                self.map[x] = usize::MAX;
                self.used &= !(1u64 << h);
            }
            for &y in &back {
                let c = self.psi.color(h, self.map[y]);
                self.classes[c].remove_edge(x, y);
            }
        }
        Ok(false)
    }
}

/// Looks for an injection of `G` into the colored `K_n` in which every
/// color class of the image spans a member of `F`.
///
/// For hereditary families a partial embedding is abandoned as soon as one
/// of its partial classes leaves `F`; other families are only checked on
/// complete embeddings. `Ok(None)` means the search was exhaustive.
pub fn find_f_colored_copy(
    psi: &EdgeColoring,
    g: &SimpleGraph,
    f: &FamilySpec,
    budget: &mut Budget,
) -> Result<Option<EmbeddingCertificate>> {
    if g.n() > psi.n() {
        return Err(Error::Precondition(format!(
            "G has {} vertices but the host only {}",
            g.n(),
            psi.n()
        )));
    }
    // Connected placement: each next vertex has the most placed neighbours.
    let mut order = Vec::with_capacity(g.n());
    let mut placed = 0u64;
    while order.len() < g.n() {
        let next = (0..g.n())
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| {
                (
                    (g.neighbors(v) & placed).count_ones(),
                    g.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .expect("unplaced vertex");
        order.push(next);
        placed |= 1u64 << next;
    }
    let mut s = CopySearch {
        psi,
        g,
        f,
        order,
        map: vec![usize::MAX; g.n()],
        used: 0,
        classes: vec![SimpleGraph::empty(g.n())?; psi.k()],
        prune: f.is_hereditary(),
        budget,
    };
    if !s.extend(0)? {
        return Ok(None);
    }
    let cert = EmbeddingCertificate {
        class_decomposition: classes_of(psi, g, &s.map),
        map: s.map,
    };
    if !cert.verify(psi, g, f)? {
        return Err(Error::Invariant("colored copy failed re-verification".into()));
    }
    Ok(Some(cert))
}
