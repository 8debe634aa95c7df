//! Exact planarity for small graphs.
//!
//! Each biconnected block is tested separately with the path-embedding
//! algorithm of Demoucron, Malgrange and Pertuiset: starting from a cycle,
//! fragments (bridges) of the unembedded part are placed one path at a time
//! into a face containing all of their attachment vertices. A fragment with no
//! admissible face proves non-planarity; a fragment with exactly one
//! admissible face is always placed first.

use crate::graph::{bits, SimpleGraph};

const NONE: usize = usize::MAX;

/// Vertex masks of the biconnected blocks with at least one edge.
fn blocks(g: &SimpleGraph) -> Vec<u64> {
    struct Tarjan<'a> {
        g: &'a SimpleGraph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<u64>,
    }
    impl Tarjan<'_> {
        fn dfs(&mut self, u: usize, parent: usize) {
            self.disc[u] = self.time;
            self.low[u] = self.time;
            self.time += 1;
            for v in bits(self.g.neighbors(u)) {
                if self.disc[v] == NONE {
                    self.stack.push((u, v));
                    self.dfs(v, u);
                    self.low[u] = self.low[u].min(self.low[v]);
                    if self.low[v] >= self.disc[u] {
                        let mut mask = 0u64;
                        while let Some((a, b)) = self.stack.pop() {
                            mask |= 1u64 << a | 1u64 << b;
                            if (a, b) == (u, v) {
                                break;
                            }
                        }
                        self.out.push(mask);
                    }
                } else if v != parent && self.disc[v] < self.disc[u] {
                    self.stack.push((u, v));
                    self.low[u] = self.low[u].min(self.disc[v]);
                }
            }
        }
    }
    let n = g.n();
    let mut t = Tarjan {
        g,
        disc: vec![NONE; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in 0..n {
        if t.disc[v] == NONE && g.neighbors(v) != 0 {
            t.dfs(v, NONE);
        }
    }
    t.out
}

fn face_mask(face: &[usize]) -> u64 {
    face.iter().fold(0, |m, &v| m | 1u64 << v)
}

/// BFS path from `from` to `to` avoiding the direct edge between them.
fn cycle_through_edge(g: &SimpleGraph, from: usize, to: usize) -> Option<Vec<usize>> {
    let mut prev = vec![NONE; g.n()];
    prev[from] = from;
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        for y in bits(g.neighbors(x)) {
            if prev[y] != NONE || (x == from && y == to) {
                continue;
            }
            prev[y] = x;
            if y == to {
                let mut path = vec![to];
                let mut c = to;
                while c != from {
                    c = prev[c];
                    path.push(c);
                }
                path.reverse();
                return Some(path);
            }
            queue.push_back(y);
        }
    }
    None
}

/// Fragment of the unembedded part: attachment vertices plus a path between
/// two of them through the fragment.
struct Fragment {
    attach: u64,
    path: Vec<usize>,
}

fn fragments(g: &SimpleGraph, embedded_v: u64, emb: &[u64]) -> Vec<Fragment> {
    let mut out = Vec::new();
    for e in g.edges() {
        let both = embedded_v >> e.u & 1 == 1 && embedded_v >> e.v & 1 == 1;
        if both && emb[e.u] >> e.v & 1 == 0 {
            out.push(Fragment {
                attach: 1u64 << e.u | 1u64 << e.v,
                path: vec![e.u, e.v],
            });
        }
    }
    let free = g.vertex_mask() & !embedded_v;
    let mut seen = 0u64;
    for s in bits(free) {
        if seen >> s & 1 == 1 {
            continue;
        }
        let mut comp = 1u64 << s;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            for x in bits(frontier) {
                next |= g.neighbors(x) & free;
            }
            frontier = next & !comp;
            comp |= next;
        }
        seen |= comp;
        let attach = bits(comp).fold(0u64, |m, c| m | g.neighbors(c)) & embedded_v;
        // Path a -> component -> b with a != b; blocks guarantee two attachments.
        let a = attach.trailing_zeros() as usize;
        let mut prev = vec![NONE; g.n()];
        let mut queue = std::collections::VecDeque::new();
        for c in bits(g.neighbors(a) & comp) {
            prev[c] = a;
            queue.push_back(c);
        }
        let mut path = Vec::new();
        while let Some(c) = queue.pop_front() {
            let exits = g.neighbors(c) & attach & !(1u64 << a);
            if exits != 0 {
                let b = exits.trailing_zeros() as usize;
                path.push(b);
                let mut x = c;
                while x != a {
                    path.push(x);
                    x = prev[x];
                }
                path.push(a);
                path.reverse();
                break;
            }
            for y in bits(g.neighbors(c) & comp) {
                if prev[y] == NONE {
                    prev[y] = c;
                    queue.push_back(y);
                }
            }
        }
        out.push(Fragment { attach, path });
    }
    out
}

/// Splits `face` along `path` (whose endpoints lie on the face).
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let a = path[0];
    let b = *path.last().unwrap();
    let len = face.len();
    let ia = face.iter().position(|&x| x == a).unwrap();
    let ib = face.iter().position(|&x| x == b).unwrap();
    let inner = &path[1..path.len() - 1];
    let mut f1 = Vec::new();
    let mut i = ia;
    loop {
        f1.push(face[i]);
        if i == ib {
            break;
        }
        i = (i + 1) % len;
    }
    f1.extend(inner.iter().rev());
    let mut f2 = Vec::new();
    let mut i = ib;
    loop {
        f2.push(face[i]);
        if i == ia {
            break;
        }
        i = (i + 1) % len;
    }
    f2.extend(inner.iter());
    (f1, f2)
}

fn biconnected_is_planar(g: &SimpleGraph) -> bool {
    let n = g.n();
    let m = g.edge_count();
    if n <= 4 {
        return true;
    }
    if m > 3 * n - 6 {
        return false;
    }
    let start = 0;
    let next = g.neighbors(start).trailing_zeros() as usize;
    let cycle = cycle_through_edge(g, start, next).expect("block has a cycle");
    let mut emb = vec![0u64; n];
    let mut embedded_v = 0u64;
    let mut embedded_edges = 0;
    let add_path = |emb: &mut Vec<u64>, embedded_v: &mut u64, p: &[usize], closed: bool| {
        let mut count = 0;
        for w in p.windows(2) {
            emb[w[0]] |= 1u64 << w[1];
            emb[w[1]] |= 1u64 << w[0];
            count += 1;
        }
        if closed {
            let (x, y) = (p[0], *p.last().unwrap());
            emb[x] |= 1u64 << y;
            emb[y] |= 1u64 << x;
            count += 1;
        }
        for &x in p {
            *embedded_v |= 1u64 << x;
        }
        count
    };
    embedded_edges += add_path(&mut emb, &mut embedded_v, &cycle, true);
    let mut faces = vec![cycle.clone(), cycle];
    while embedded_edges < m {
        let frags = fragments(g, embedded_v, &emb);
        let masks: Vec<u64> = faces.iter().map(|f| face_mask(f)).collect();
        let mut choice = None;
        for (fi, frag) in frags.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&k| masks[k] & frag.attach == frag.attach)
                .collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face) = choice.expect("unembedded edges leave a fragment");
        let path = &frags[fi].path;
        let (f1, f2) = split_face(&faces[face], path);
        faces[face] = f1;
        faces.push(f2);
        embedded_edges += add_path(&mut emb, &mut embedded_v, path, false);
    }
    true
}

pub fn is_planar(g: &SimpleGraph) -> bool {
    let n_active = g.non_isolated().count_ones() as usize;
    if n_active >= 3 && g.edge_count() > 3 * n_active - 6 {
        return false;
    }
    blocks(g)
        .into_iter()
        .all(|mask| biconnected_is_planar(&g.induced(mask)))
}

/// Outerplanar iff adding a vertex adjacent to everything keeps it planar.
pub fn is_outerplanar(g: &SimpleGraph) -> bool {
    let h = g.without_isolated();
    match h.join(&SimpleGraph::empty(1).expect("one vertex")) {
        Ok(apex) => is_planar(&apex),
        // 64 non-isolated vertices: the edge bound 2n-3 is still necessary.
        Err(_) => false,
    }
}
