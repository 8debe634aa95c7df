//! Turán numbers: the balanced multipartite formula, the Kővári–Sós–Turán
//! bound, and an exact branch-and-bound search for small hosts.

use serde::Serialize;
use serde_json::json;

use crate::error::{Budget, Error, Result};
use crate::graph::{
    contains_subgraph, contains_subgraph_through, named_graph, write_edge_list, GraphSpec, SimpleGraph,
};

/// Default vertex cap for [`ex_exact_small`].
pub const EX_VERTEX_LIMIT: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TuranMethod {
    Formula,
    Search,
    Bound,
}

#[derive(Debug, Clone)]
pub struct TuranResult {
    pub n: usize,
    pub value: usize,
    pub extremal_graph: SimpleGraph,
    pub exact: bool,
    pub method: TuranMethod,
}

impl TuranResult {
    /// Checks order and size of the witness and that it avoids `forbidden`.
    pub fn verify(&self, forbidden: &[SimpleGraph]) -> bool {
        self.extremal_graph.n() == self.n
            && self.extremal_graph.edge_count() == self.value
            && forbidden
                .iter()
                .all(|f| !contains_subgraph(&self.extremal_graph, &f.without_isolated()))
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n": self.n,
            "value": self.value,
            "exact": self.exact,
            "method": self.method,
            "extremal_graph": write_edge_list(&self.extremal_graph),
        })
    }
}

/// `ex(n, K_r)`, attained by the balanced complete `(r-1)`-partite graph.
pub fn turan_number(n: usize, r: usize) -> Result<TuranResult> {
    if r < 2 || n < 1 {
        return Err(Error::InvalidInput(format!(
            "need n >= 1 and r >= 2, got n = {n}, r = {r}"
        )));
    }
    let g = named_graph(&GraphSpec::Turan(n, r - 1))?;
    Ok(TuranResult {
        n,
        value: g.edge_count(),
        extremal_graph: g,
        exact: true,
        method: TuranMethod::Formula,
    })
}

/// The finite Kővári–Sós–Turán bound
/// `((b-1)^(1/a) (n-a+1) n^(1-1/a) + (a-1) n) / 2` on `ex(n, K_{a,b})`.
pub fn kst_bound(n: usize, a: usize, b: usize) -> Result<f64> {
    if a < 2 || a > b {
        return Err(Error::InvalidInput(format!("need 2 <= a <= b, got a = {a}, b = {b}")));
    }
    let (nf, af, bf) = (n as f64, a as f64, b as f64);
    let main = (bf - 1.0).powf(1.0 / af) * (nf - af + 1.0) * nf.powf(1.0 - 1.0 / af);
    Ok(0.5 * (main + (af - 1.0) * nf))
}

/// Strips isolated vertices and keeps one representative of each
/// subgraph-minimal pattern; avoiding those avoids all of `forbidden`.
pub fn minimal_forbidden(forbidden: &[SimpleGraph]) -> Result<Vec<SimpleGraph>> {
    if forbidden.is_empty() {
        return Err(Error::InvalidInput("the forbidden list is empty".into()));
    }
    let mut pats: Vec<SimpleGraph> = Vec::with_capacity(forbidden.len());
    for f in forbidden {
        let h = f.without_isolated();
        if h.edge_count() == 0 {
            return Err(Error::InvalidInput(
                "an edgeless forbidden graph is contained in every graph".into(),
            ));
        }
        pats.push(h);
    }
    pats.sort_by_key(|p| (p.edge_count(), p.n()));
    let mut kept: Vec<SimpleGraph> = Vec::new();
    for p in pats {
        if !kept.iter().any(|k| contains_subgraph(&p, k)) {
            kept.push(p);
        }
    }
    Ok(kept)
}

struct ExSearch<'a> {
    forbidden: &'a [SimpleGraph],
    edges: Vec<(usize, usize)>,
    g: SimpleGraph,
    count: usize,
    /// Undecided edges at each vertex.
    open: Vec<usize>,
    best: usize,
    best_graph: SimpleGraph,
    /// `ex` on one vertex fewer; a graph beating `best` has minimum degree
    /// at least `best + 1 - prev`.
    prev: usize,
    budget: &'a mut Budget,
}

impl ExSearch<'_> {
    fn min_degree(&self) -> usize {
        (self.best + 1).saturating_sub(self.prev)
    }

    fn walk(&mut self, i: usize) -> Result<()> {
        self.budget.tick(self.best as u64)?;
        if self.count + (self.edges.len() - i) <= self.best {
            return Ok(());
        }
        if i == self.edges.len() {
            self.best = self.count;
            self.best_graph = self.g.clone();
            return Ok(());
        }
        let (u, v) = self.edges[i];
        self.open[u] -= 1;
        self.open[v] -= 1;
        self.g.add_edge(u, v);
        self.count += 1;
        if !self
            .forbidden
            .iter()
            .any(|f| contains_subgraph_through(&self.g, f, u, v))
        {
            self.walk(i + 1)?;
        }
        self.g.remove_edge(u, v);
        self.count -= 1;
        let need = self.min_degree();
        if self.g.degree(u) + self.open[u] >= need && self.g.degree(v) + self.open[v] >= need {
            self.walk(i + 1)?;
        }
        self.open[u] += 1;
        self.open[v] += 1;
        Ok(())
    }
}

/// Exact `ex(n, forbidden)` for `n <= EX_VERTEX_LIMIT`.
///
/// Solves `k = 1, ..., n` in turn. For each `k` the graphs are built edge
/// by edge, an added edge is rejected as soon as it completes a forbidden
/// copy, and a branch is cut when it cannot beat the incumbent (seeded with
/// the optimum for `k - 1` plus an isolated vertex) or when some vertex can
/// no longer reach the minimum degree every better graph must have.
/// Running out of budget returns the best graph found with `exact = false`.
pub fn ex_exact_small(n: usize, forbidden: &[SimpleGraph], budget: &mut Budget) -> Result<TuranResult> {
    ex_exact_with_limit(n, forbidden, EX_VERTEX_LIMIT, budget)
}

pub fn ex_exact_with_limit(
    n: usize,
    forbidden: &[SimpleGraph],
    limit: usize,
    budget: &mut Budget,
) -> Result<TuranResult> {
    if n > limit {
        return Err(Error::TooLarge {
            what: "exact extremal search host",
            size: n,
            limit,
        });
    }
    let pats = minimal_forbidden(forbidden)?;
    let mut prev = 0;
    let mut graph = SimpleGraph::empty(0)?;
    for k in 1..=n {
        let seed = graph.disjoint_union(&SimpleGraph::empty(1)?)?;
        let mut s = ExSearch {
            forbidden: &pats,
            edges: (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v))).collect(),
            g: SimpleGraph::empty(k)?,
            count: 0,
            open: vec![k - 1; k],
            best: prev,
            best_graph: seed,
            prev,
            budget: &mut *budget,
        };
        let outcome = s.walk(0);
        let (best, best_graph) = (s.best, s.best_graph);
        match outcome {
            Ok(()) => {}
            Err(Error::BudgetExceeded { .. }) => {
                let pad = SimpleGraph::empty(n - k)?;
                let g = best_graph.disjoint_union(&pad)?;
                return Ok(TuranResult {
                    n,
                    value: g.edge_count(),
                    extremal_graph: g,
                    exact: false,
                    method: TuranMethod::Search,
                });
            }
            Err(e) => return Err(e),
        }
        prev = best;
        graph = best_graph;
    }
    let result = TuranResult {
        n,
        value: prev,
        extremal_graph: graph,
        exact: true,
        method: TuranMethod::Search,
    };
    if !result.verify(&pats) {
        return Err(Error::Invariant("extremal witness contains a forbidden graph".into()));
    }
    Ok(result)
}
