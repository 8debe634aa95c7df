use super::{SimpleGraph, MAX_VERTICES};
use crate::error::{Error, Result};

/// Named graph generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSpec {
    /// `K_p`.
    Complete(usize),
    /// `K_{a,b,...}` with the given part sizes.
    CompleteMultipartite(Vec<usize>),
    /// `C_k`, `k >= 3`.
    Cycle(usize),
    /// `P_k` on `k` vertices.
    Path(usize),
    /// `tK_2`.
    Matching(usize),
    /// `W_k = C_k + K_1`; the apex is vertex `k`.
    Wheel(usize),
    /// `B_t = K_2 + tK_1`; the spine is `0-1`.
    Book(usize),
    /// `M_{s,t} = sK_2 + tK_1`.
    MatchingJoin(usize, usize),
    /// `B(H,r) = H + rK_1`.
    Join(Box<SimpleGraph>, usize),
    /// Balanced complete `r`-partite graph on `n` vertices.
    Turan(usize, usize),
    /// `K_p` minus the edge between its last two vertices.
    CompleteMinusEdge(usize),
    /// Edgeless graph on `n` vertices.
    Empty(usize),
    Petersen,
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::TooLarge {
            what: "generated graph",
            size: n,
            limit: MAX_VERTICES,
        })
    } else {
        Ok(())
    }
}

fn complete_multipartite(sizes: &[usize]) -> Result<SimpleGraph> {
    let n: usize = sizes.iter().sum();
    check_order(n)?;
    let mut part = Vec::with_capacity(n);
    for (i, &s) in sizes.iter().enumerate() {
        part.extend(std::iter::repeat_n(i, s));
    }
    let mut g = SimpleGraph::empty(n)?;
    for a in 0..n {
        for b in a + 1..n {
            if part[a] != part[b] {
                g.add_edge(a, b);
            }
        }
    }
    Ok(g)
}

/// Part sizes of the balanced `r`-partite graph on `n` vertices, largest first.
pub(crate) fn balanced_parts(n: usize, r: usize) -> Vec<usize> {
    (0..r).map(|i| n / r + usize::from(i < n % r)).collect()
}

pub fn named_graph(spec: &GraphSpec) -> Result<SimpleGraph> {
    use GraphSpec::*;
    match spec {
        Complete(p) => {
            check_order(*p)?;
            SimpleGraph::complete(*p)
        }
        CompleteMultipartite(sizes) => complete_multipartite(sizes),
        Cycle(k) => {
            if *k < 3 {
                return Err(Error::InvalidInput(format!("cycle needs >= 3 vertices, got {k}")));
            }
            check_order(*k)?;
            SimpleGraph::from_edges(*k, (0..*k).map(|i| (i, (i + 1) % k)))
        }
        Path(k) => {
            check_order(*k)?;
            SimpleGraph::from_edges(*k, (1..*k).map(|i| (i - 1, i)))
        }
        Matching(t) => {
            check_order(2 * t)?;
            SimpleGraph::from_edges(2 * t, (0..*t).map(|i| (2 * i, 2 * i + 1)))
        }
        Wheel(k) => {
            let rim = named_graph(&Cycle(*k))?;
            rim.join(&SimpleGraph::empty(1)?)
        }
        Book(t) => named_graph(&MatchingJoin(1, *t)),
        MatchingJoin(s, t) => {
            check_order(2 * s + t)?;
            named_graph(&Matching(*s))?.join(&SimpleGraph::empty(*t)?)
        }
        Join(h, r) => {
            check_order(h.n() + r)?;
            h.join(&SimpleGraph::empty(*r)?)
        }
        Turan(n, r) => {
            if *r == 0 {
                return Err(Error::InvalidInput("Turán graph needs r >= 1".into()));
            }
            complete_multipartite(&balanced_parts(*n, *r))
        }
        CompleteMinusEdge(p) => {
            if *p < 2 {
                return Err(Error::InvalidInput("K_p - e needs p >= 2".into()));
            }
            let mut g = named_graph(&Complete(*p))?;
            g.remove_edge(p - 2, p - 1);
            Ok(g)
        }
        Empty(n) => {
            check_order(*n)?;
            SimpleGraph::empty(*n)
        }
        Petersen => {
            let outer = (0..5).map(|i| (i, (i + 1) % 5));
            let spokes = (0..5).map(|i| (i, i + 5));
            let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
            SimpleGraph::from_edges(10, outer.chain(spokes).chain(inner))
        }
    }
}

fn parse_list(s: &str) -> Option<Vec<usize>> {
    s.split(',').map(|x| x.trim().parse().ok()).collect()
}

/// Parses generator literals such as `K6`, `K2,3`, `K4-e`, `C5`, `P4`,
/// `2K2`, `W5`, `B3`, `M2,3`, `T10,3`, `E4` and `petersen`.
pub fn parse_graph_literal(text: &str) -> Option<GraphSpec> {
    let s = text.trim();
    if s.eq_ignore_ascii_case("petersen") {
        return Some(GraphSpec::Petersen);
    }
    if let Some(rest) = s.strip_suffix("-e").or_else(|| s.strip_suffix("-E")) {
        let p = rest.strip_prefix(['K', 'k'])?.parse().ok()?;
        return Some(GraphSpec::CompleteMinusEdge(p));
    }
    // tK2
    if let Some(pos) = s.find(['K', 'k']) {
        if pos > 0 && s[pos + 1..] == *"2" {
            let t = s[..pos].parse().ok()?;
            return Some(GraphSpec::Matching(t));
        }
    }
    let mut chars = s.chars();
    let head = chars.next()?.to_ascii_uppercase();
    let rest = chars.as_str();
    let nums = parse_list(rest)?;
    match (head, nums.as_slice()) {
        ('K', [p]) => Some(GraphSpec::Complete(*p)),
        ('K', parts) if parts.len() >= 2 => Some(GraphSpec::CompleteMultipartite(parts.to_vec())),
        ('C', [k]) => Some(GraphSpec::Cycle(*k)),
        ('P', [k]) => Some(GraphSpec::Path(*k)),
        ('W', [k]) => Some(GraphSpec::Wheel(*k)),
        ('B', [t]) => Some(GraphSpec::Book(*t)),
        ('M', [s, t]) => Some(GraphSpec::MatchingJoin(*s, *t)),
        ('T', [n, r]) => Some(GraphSpec::Turan(*n, *r)),
        ('E', [n]) => Some(GraphSpec::Empty(*n)),
        _ => None,
    }
}
