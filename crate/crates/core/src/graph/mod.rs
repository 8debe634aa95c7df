//! Small undirected simple graphs stored as one neighbor bitmask per vertex.

mod coloring;
mod generators;
pub(crate) mod io;
mod iso;
mod stats;

pub use coloring::{chromatic_index, chromatic_number, is_k_colorable, max_clique, optimal_coloring};
pub use generators::{named_graph, parse_graph_literal, GraphSpec};
pub use io::{read_edge_list, write_edge_list};
pub use iso::{contains_subgraph, contains_subgraph_through, find_subgraph, is_isomorphic, ISO_VERTEX_LIMIT};
pub use stats::{degeneracy, structural_stats, Girth, GraphStats};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// An undirected edge with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalizes the endpoint order. Panics on a loop.
    pub fn new(a: usize, b: usize) -> Edge {
        assert_ne!(a, b, "loop edge {a}-{a}");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Self {
        Edge::new(a, b)
    }
}

/// Graph on vertices `0..n` (`n <= 64`); row `i` of `adj` is the neighbor set of `i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u64>,
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a mask in increasing order.
#[inline]
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

impl SimpleGraph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<SimpleGraph> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "graph",
                size: n,
                limit: MAX_VERTICES,
            });
        }
        Ok(SimpleGraph { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<SimpleGraph> {
        let mut g = SimpleGraph::empty(n)?;
        let all = low_mask(n);
        for v in 0..n {
            g.adj[v] = all & !(1u64 << v);
        }
        Ok(g)
    }

    /// Builds a graph from an explicit edge list, rejecting loops, duplicates
    /// and out-of-range endpoints.
    pub fn from_edges<I, E>(n: usize, edges: I) -> Result<SimpleGraph>
    where
        I: IntoIterator<Item = E>,
        E: Into<(usize, usize)>,
    {
        let mut g = SimpleGraph::empty(n)?;
        for e in edges {
            let (a, b) = e.into();
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {a}-{b} has an endpoint outside 0..{n}"
                )));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            if g.has_edge(a, b) {
                return Err(Error::InvalidGraph(format!("duplicate edge {a}-{b}")));
            }
            g.add_edge(a, b);
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbor masks after checking symmetry.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<SimpleGraph> {
        let n = adj.len();
        let g = SimpleGraph { n, adj };
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "graph",
                size: n,
                limit: MAX_VERTICES,
            });
        }
        for v in 0..n {
            if g.adj[v] & !low_mask(n) != 0 {
                return Err(Error::InvalidGraph(format!("row {v} has bits beyond n")));
            }
            if g.adj[v] >> v & 1 == 1 {
                return Err(Error::InvalidGraph(format!("loop at vertex {v}")));
            }
            for w in bits(g.adj[v]) {
                if g.adj[w] >> v & 1 == 0 {
                    return Err(Error::InvalidGraph(format!("asymmetric pair {v},{w}")));
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    /// Vertices with at least one neighbor.
    pub fn non_isolated(&self) -> u64 {
        (0..self.n).filter(|&v| self.adj[v] != 0).fold(0, |m, v| m | 1u64 << v)
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] & !low_mask(u + 1)) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    #[inline]
    pub(crate) fn add_edge(&mut self, a: usize, b: usize) {
        self.adj[a] |= 1u64 << b;
        self.adj[b] |= 1u64 << a;
    }

    #[inline]
    pub(crate) fn remove_edge(&mut self, a: usize, b: usize) {
        self.adj[a] &= !(1u64 << b);
        self.adj[b] &= !(1u64 << a);
    }

    /// Same vertex set, edges `E(G) \ S`. Every edge of `S` must be present.
    pub fn delete_edges(&self, edges: &[Edge]) -> Result<SimpleGraph> {
        let mut g = self.clone();
        for e in edges {
            if e.v >= self.n || !g.has_edge(e.u, e.v) {
                return Err(Error::InvalidInput(format!("edge {e} is not in the graph")));
            }
            g.remove_edge(e.u, e.v);
        }
        Ok(g)
    }

    /// The spanning subgraph with exactly the given edges.
    pub fn spanning_subgraph(&self, edges: &[Edge]) -> Result<SimpleGraph> {
        let mut g = SimpleGraph::empty(self.n)?;
        for e in edges {
            if e.v >= self.n || !self.has_edge(e.u, e.v) {
                return Err(Error::InvalidInput(format!("edge {e} is not in the graph")));
            }
            g.add_edge(e.u, e.v);
        }
        Ok(g)
    }

    /// Subgraph induced on the vertices of `mask`, relabeled to `0..k` in order.
    pub fn induced(&self, mask: u64) -> SimpleGraph {
        let keep: Vec<usize> = bits(mask & self.vertex_mask()).collect();
        let mut pos = [usize::MAX; 64];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let mut adj = vec![0u64; keep.len()];
        for (i, &v) in keep.iter().enumerate() {
            for w in bits(self.adj[v] & mask) {
                adj[i] |= 1u64 << pos[w];
            }
        }
        SimpleGraph { n: keep.len(), adj }
    }

    /// Drops isolated vertices.
    pub fn without_isolated(&self) -> SimpleGraph {
        self.induced(self.non_isolated())
    }

    /// Applies a vertex relabeling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<SimpleGraph> {
        if perm.len() != self.n {
            return Err(Error::InvalidInput("permutation length differs from n".into()));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen >> p & 1 == 1 {
                return Err(Error::InvalidInput("not a permutation".into()));
            }
            seen |= 1u64 << p;
        }
        let mut g = SimpleGraph::empty(self.n)?;
        for e in self.edges() {
            g.add_edge(perm[e.u], perm[e.v]);
        }
        Ok(g)
    }

    /// Disjoint union; the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> Result<SimpleGraph> {
        let mut g = SimpleGraph::empty(self.n + other.n)?;
        for e in self.edges() {
            g.add_edge(e.u, e.v);
        }
        for e in other.edges() {
            g.add_edge(e.u + self.n, e.v + self.n);
        }
        Ok(g)
    }

    /// Complete join: disjoint union plus every cross edge.
    pub fn join(&self, other: &SimpleGraph) -> Result<SimpleGraph> {
        let mut g = self.disjoint_union(other)?;
        for a in 0..self.n {
            for b in 0..other.n {
                g.add_edge(a, self.n + b);
            }
        }
        Ok(g)
    }

    pub fn complement(&self) -> SimpleGraph {
        let all = self.vertex_mask();
        let adj = (0..self.n).map(|v| !self.adj[v] & all & !(1u64 << v)).collect();
        SimpleGraph { n: self.n, adj }
    }

    /// Connected components as vertex masks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for v in 0..self.n {
            if seen >> v & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << v;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for x in bits(frontier) {
                    next |= self.adj[x];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn has_triangle(&self) -> bool {
        self.edges().iter().any(|e| self.adj[e.u] & self.adj[e.v] != 0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.edge_count() + self.components().len() == self.n
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}{}", e.u, e.v)?;
        }
        write!(f, "])")
    }
}
