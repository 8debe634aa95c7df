use std::fmt;

use serde::{Serialize, Serializer};

use super::{bits, SimpleGraph};

/// Length of a shortest cycle; forests have infinite girth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => s.serialize_u64(*g as u64),
            Girth::Infinite => s.serialize_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    pub max_degree: usize,
    pub degeneracy: usize,
    pub girth: Girth,
    pub is_bipartite: bool,
    pub edge_count: usize,
}

/// Largest minimum degree met while repeatedly deleting a minimum-degree vertex.
pub fn degeneracy(g: &SimpleGraph) -> usize {
    let mut alive = g.vertex_mask();
    let mut best = 0;
    while alive != 0 {
        let v = bits(alive)
            .min_by_key(|&v| (g.neighbors(v) & alive).count_ones())
            .unwrap();
        best = best.max((g.neighbors(v) & alive).count_ones() as usize);
        alive &= !(1u64 << v);
    }
    best
}

/// BFS from every vertex; a non-tree edge seen at depths `d(x), d(y)` closes
/// a cycle of length at most `d(x) + d(y) + 1`, and the minimum over all
/// roots is exact.
fn girth(g: &SimpleGraph) -> Girth {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = Vec::with_capacity(n);
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        queue.clear();
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.push(root);
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            if 2 * dist[x] + 1 >= best {
                break;
            }
            for y in bits(g.neighbors(x)) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push(y);
                } else if parent[x] != y {
                    best = best.min(dist[x] + dist[y] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

fn is_bipartite(g: &SimpleGraph) -> bool {
    let mut side = vec![u8::MAX; g.n()];
    for root in 0..g.n() {
        if side[root] != u8::MAX {
            continue;
        }
        side[root] = 0;
        let mut stack = vec![root];
        while let Some(x) = stack.pop() {
            for y in bits(g.neighbors(x)) {
                if side[y] == u8::MAX {
                    side[y] = 1 - side[x];
                    stack.push(y);
                } else if side[y] == side[x] {
                    return false;
                }
            }
        }
    }
    true
}

pub fn structural_stats(g: &SimpleGraph) -> GraphStats {
    GraphStats {
        max_degree: g.max_degree(),
        degeneracy: degeneracy(g),
        girth: girth(g),
        is_bipartite: is_bipartite(g),
        edge_count: g.edge_count(),
    }
}
