use super::{bits, SimpleGraph};
use crate::error::{Error, Result};

/// Vertex cap for [`is_isomorphic`].
pub const ISO_VERTEX_LIMIT: usize = 16;

/// Search order for the pattern: each next vertex has the most neighbors
/// already placed, ties broken by degree and then by index.
fn placement_order(p: &SimpleGraph, seed: &[usize]) -> Vec<usize> {
    let mut order: Vec<usize> = seed.to_vec();
    let mut placed = seed.iter().fold(0u64, |m, &v| m | 1u64 << v);
    while order.len() < p.n() {
        let next = (0..p.n())
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| {
                let back = (p.neighbors(v) & placed).count_ones();
                (back, p.degree(v), std::cmp::Reverse(v))
            })
            .unwrap();
        order.push(next);
        placed |= 1u64 << next;
    }
    order
}

/// Backtracking embedding of `pattern` into `host`, honoring any images
/// already present in `map`.
struct Embedder<'a> {
    pattern: &'a SimpleGraph,
    host: &'a SimpleGraph,
    order: Vec<usize>,
    map: Vec<usize>,
    induced: bool,
    /// Per pattern vertex, the host vertices it may map to.
    allowed: Vec<u64>,
}

impl<'a> Embedder<'a> {
    fn candidates(&self, x: usize, used: u64) -> u64 {
        let mut cand = self.allowed[x] & !used;
        for y in bits(self.pattern.neighbors(x)) {
            let img = self.map[y];
            if img != usize::MAX {
                cand &= self.host.neighbors(img);
            }
        }
        if self.induced {
            for (y, &img) in self.map.iter().enumerate() {
                if img != usize::MAX && y != x && !self.pattern.has_edge(x, y) {
                    cand &= !self.host.neighbors(img);
                }
            }
        }
        cand
    }

    fn extend(&mut self, depth: usize, used: u64) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let x = self.order[depth];
        if self.map[x] != usize::MAX {
            return self.extend(depth + 1, used);
        }
        for h in bits(self.candidates(x, used)) {
            self.map[x] = h;
            if self.extend(depth + 1, used | 1u64 << h) {
                return true;
            }
            self.map[x] = usize::MAX;
        }
        false
    }
}

fn degree_allowed(pattern: &SimpleGraph, host: &SimpleGraph) -> Vec<u64> {
    (0..pattern.n())
        .map(|x| {
            let d = pattern.degree(x);
            (0..host.n())
                .filter(|&h| host.degree(h) >= d)
                .fold(0u64, |m, h| m | 1u64 << h)
        })
        .collect()
}

/// Finds an injection `pattern -> host` mapping edges to edges (a
/// not-necessarily-induced subgraph copy). `map[x]` is the image of `x`.
pub fn find_subgraph(pattern: &SimpleGraph, host: &SimpleGraph) -> Option<Vec<usize>> {
    if pattern.n() > host.n() || pattern.edge_count() > host.edge_count() {
        return None;
    }
    let mut e = Embedder {
        pattern,
        host,
        order: placement_order(pattern, &[]),
        map: vec![usize::MAX; pattern.n()],
        induced: false,
        allowed: degree_allowed(pattern, host),
    };
    e.extend(0, 0).then_some(e.map)
}

pub fn contains_subgraph(host: &SimpleGraph, pattern: &SimpleGraph) -> bool {
    find_subgraph(pattern, host).is_some()
}

/// Whether `host` contains a copy of `pattern` that uses the host edge `u-v`.
/// Used by edge-by-edge searches, where only copies through the newest
/// edge can be new.
pub fn contains_subgraph_through(host: &SimpleGraph, pattern: &SimpleGraph, u: usize, v: usize) -> bool {
    if !host.has_edge(u, v) || pattern.n() > host.n() {
        return false;
    }
    let allowed = degree_allowed(pattern, host);
    for pe in pattern.edges() {
        for (a, b) in [(pe.u, pe.v), (pe.v, pe.u)] {
            if allowed[a] >> u & 1 == 0 || allowed[b] >> v & 1 == 0 {
                continue;
            }
            let mut map = vec![usize::MAX; pattern.n()];
            map[a] = u;
            map[b] = v;
            let mut e = Embedder {
                pattern,
                host,
                order: placement_order(pattern, &[a, b]),
                map,
                induced: false,
                allowed: allowed.clone(),
            };
            if e.extend(0, 1u64 << u | 1u64 << v) {
                return true;
            }
        }
    }
    false
}

/// Degree plus sorted neighbor degrees; preserved by isomorphisms.
fn vertex_invariant(g: &SimpleGraph, v: usize) -> (usize, Vec<usize>) {
    let mut nd: Vec<usize> = bits(g.neighbors(v)).map(|w| g.degree(w)).collect();
    nd.sort_unstable();
    (g.degree(v), nd)
}

pub fn is_isomorphic(g: &SimpleGraph, h: &SimpleGraph) -> Result<bool> {
    for x in [g, h] {
        if x.n() > ISO_VERTEX_LIMIT {
            return Err(Error::TooLarge {
                what: "isomorphism input",
                size: x.n(),
                limit: ISO_VERTEX_LIMIT,
            });
        }
    }
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let gi: Vec<_> = (0..g.n()).map(|v| vertex_invariant(g, v)).collect();
    let hi: Vec<_> = (0..h.n()).map(|v| vertex_invariant(h, v)).collect();
    let mut gs = gi.clone();
    let mut hs = hi.clone();
    gs.sort();
    hs.sort();
    if gs != hs {
        return Ok(false);
    }
    let allowed = (0..g.n())
        .map(|x| (0..h.n()).filter(|&y| hi[y] == gi[x]).fold(0u64, |m, y| m | 1u64 << y))
        .collect();
    let mut e = Embedder {
        pattern: g,
        host: h,
        order: placement_order(g, &[]),
        map: vec![usize::MAX; g.n()],
        induced: true,
        allowed,
    };
    Ok(e.extend(0, 0))
}
