use super::{bits, SimpleGraph};
use crate::error::{Error, Result};

const NONE: usize = usize::MAX;

/// DSATUR branch and bound. `colors[v]` is the color of `v` or `NONE`;
/// `classes[c]` is the vertex mask of color `c`.
struct Dsatur<'a> {
    g: &'a SimpleGraph,
    colors: Vec<usize>,
    classes: Vec<u64>,
    best: usize,
    best_coloring: Option<Vec<usize>>,
    stop_at: usize,
}

impl<'a> Dsatur<'a> {
    fn new(g: &'a SimpleGraph, best: usize, stop_at: usize) -> Self {
        Dsatur {
            g,
            colors: vec![NONE; g.n()],
            classes: Vec::with_capacity(g.n()),
            best,
            best_coloring: None,
            stop_at,
        }
    }

    /// Uncolored vertex with the most distinct neighbor colors; ties go to the
    /// larger uncolored degree, then to the lower index.
    fn pick(&self, uncolored: u64) -> usize {
        let mut pick = NONE;
        let mut key = (0usize, 0usize);
        for v in bits(uncolored) {
            let nb = self.g.neighbors(v);
            let sat = self.classes.iter().filter(|&&c| c & nb != 0).count();
            let deg = (nb & uncolored).count_ones() as usize;
            if pick == NONE || (sat, deg) > key {
                pick = v;
                key = (sat, deg);
            }
        }
        pick
    }

    fn done(&self) -> bool {
        self.best <= self.stop_at
    }

    fn search(&mut self, uncolored: u64) {
        let used = self.classes.len();
        if uncolored == 0 {
            if used < self.best {
                self.best = used;
                self.best_coloring = Some(self.colors.clone());
            }
            return;
        }
        if used >= self.best {
            return;
        }
        let v = self.pick(uncolored);
        let nb = self.g.neighbors(v);
        let rest = uncolored & !(1u64 << v);
        for c in 0..used {
            if self.classes[c] & nb == 0 {
                self.colors[v] = c;
                self.classes[c] |= 1u64 << v;
                self.search(rest);
                self.classes[c] &= !(1u64 << v);
                self.colors[v] = NONE;
                if self.done() {
                    return;
                }
            }
        }
        if used + 1 < self.best {
            self.colors[v] = used;
            self.classes.push(1u64 << v);
            self.search(rest);
            self.classes.pop();
            self.colors[v] = NONE;
        }
    }
}

/// Vertex set of a maximum clique (lowest-index-first among ties).
pub fn max_clique(g: &SimpleGraph) -> u64 {
    fn grow(g: &SimpleGraph, current: u64, mut cand: u64, best: &mut u64) {
        if cand == 0 {
            if current.count_ones() > best.count_ones() {
                *best = current;
            }
            return;
        }
        while cand != 0 {
            if current.count_ones() + cand.count_ones() <= best.count_ones() {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            grow(g, current | 1u64 << v, cand & g.neighbors(v), best);
        }
        if current.count_ones() > best.count_ones() {
            *best = current;
        }
    }
    let mut best = 0u64;
    grow(g, 0, g.vertex_mask(), &mut best);
    best
}

/// An optimal proper coloring: `coloring[v]` in `0..chi`.
pub fn optimal_coloring(g: &SimpleGraph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let lower = max_clique(g).count_ones() as usize;
    let mut solver = Dsatur::new(g, n + 1, lower);
    solver.search(g.vertex_mask());
    solver.best_coloring.expect("n colors always suffice")
}

/// Exact chromatic number; 0 for the graph without vertices.
pub fn chromatic_number(g: &SimpleGraph) -> usize {
    optimal_coloring(g).iter().map(|&c| c + 1).max().unwrap_or(0)
}

pub fn is_k_colorable(g: &SimpleGraph, k: usize) -> bool {
    if g.n() == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    if max_clique(g).count_ones() as usize > k {
        return false;
    }
    let mut solver = Dsatur::new(g, k + 1, k);
    solver.search(g.vertex_mask());
    solver.best <= k
}

/// Chromatic index, computed as the chromatic number of the line graph.
pub fn chromatic_index(g: &SimpleGraph) -> Result<usize> {
    let edges = g.edges();
    if edges.len() > super::MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "line graph",
            size: edges.len(),
            limit: super::MAX_VERTICES,
        });
    }
    let mut line = SimpleGraph::empty(edges.len())?;
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a, b) = (edges[i], edges[j]);
            if a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v {
                line.add_edge(i, j);
            }
        }
    }
    Ok(chromatic_number(&line))
}
