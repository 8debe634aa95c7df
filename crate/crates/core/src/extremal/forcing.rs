//! Exact forcing numbers `f(n, G | F)` for tiny `n`, and the deck-based
//! lower-bound coloring.

use std::collections::HashSet;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use super::{ex_exact_small, find_f_colored_copy, minimal_forbidden, pair_index, EdgeColoring, TuranResult};
use crate::decomposition::{deck_with_scope, DeckScope};
use crate::error::{Budget, Error, Result};
use crate::families::FamilySpec;
use crate::graph::{Edge, SimpleGraph};

/// Largest host handled without symmetry reduction.
pub const EXHAUSTIVE_LIMIT: usize = 5;
/// Largest host handled at all.
pub const SYMMETRY_LIMIT: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Attestation {
    /// Every partition was examined or ruled out by a sound bound.
    Exhaustive,
    /// Partial colorings were additionally identified up to relabeling the
    /// vertices already colored.
    SymmetryPruned,
}

#[derive(Debug, Clone, Copy)]
pub struct ForcingOptions {
    /// Identify isomorphic partial colorings; required for `n = 6`.
    pub symmetry: bool,
    /// Worker threads; `1` gives a deterministic avoider.
    pub jobs: usize,
    /// Search nodes allowed across all workers.
    pub budget: u64,
}

impl Default for ForcingOptions {
    fn default() -> Self {
        ForcingOptions {
            symmetry: false,
            jobs: 1,
            budget: 2_000_000_000,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ForcingResult {
    pub n: usize,
    pub f: usize,
    /// A coloring with `f - 1` colors and no `F`-colored copy; absent when
    /// `f = 1`.
    pub extremal_avoider: Option<EdgeColoring>,
    pub attestation: Attestation,
    pub nodes: u64,
}

impl ForcingResult {
    pub fn to_json(&self, avoider_file: Option<&str>) -> serde_json::Value {
        json!({
            "n": self.n,
            "f": self.f,
            "avoider_colors": self.extremal_avoider.as_ref().map_or(0, EdgeColoring::k),
            "avoider_file": avoider_file,
            "attestation": self.attestation,
        })
    }
}

/// Edges of `K_n` ordered by larger endpoint, so the first `C(k,2)` span `K_k`.
fn colex_edges(n: usize) -> Vec<Edge> {
    (1..n).flat_map(|v| (0..v).map(move |u| Edge { u, v })).collect()
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in 0..k {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                go(k, cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(k, &mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

struct Scan<'a> {
    edges: &'a [Edge],
    pattern: &'a SimpleGraph,
    family: &'a FamilySpec,
    labels: Vec<usize>,
    best: &'a AtomicUsize,
    found: Option<Vec<usize>>,
    symmetry: bool,
    perms: &'a [Vec<Vec<usize>>],
    memo: Vec<HashSet<Vec<u8>>>,
    nodes: &'a AtomicU64,
    limit: u64,
}

impl Scan<'_> {
    fn prefix_coloring(&self, k: usize, labels: &[usize]) -> Result<EdgeColoring> {
        let mut raw = vec![0; k * (k - 1) / 2];
        for (e, &c) in self.edges.iter().zip(labels) {
            raw[pair_index(k, e.u, e.v)] = c;
        }
        EdgeColoring::normalized(k, &raw)
    }

    fn has_copy(&self, psi: &EdgeColoring) -> Result<bool> {
        Ok(find_f_colored_copy(psi, self.pattern, self.family, &mut Budget::unlimited())?.is_some())
    }

    /// Smallest relabeled restricted growth string over all vertex permutations.
    fn canonical(&self, k: usize) -> Vec<u8> {
        let m = k * (k - 1) / 2;
        let mut best: Option<Vec<u8>> = None;
        let mut img = vec![0usize; m];
        for perm in &self.perms[k] {
            for (i, e) in self.edges[..m].iter().enumerate() {
                let (a, b) = (perm[e.u], perm[e.v]);
                let (a, b) = (a.min(b), a.max(b));
                // Colex position of {a, b}.
                img[b * (b - 1) / 2 + a] = self.labels[i];
            }
            let mut map = [u8::MAX; 64];
            let mut next = 0u8;
            let rgs: Vec<u8> = img
                .iter()
                .map(|&c| {
                    if map[c] == u8::MAX {
                        map[c] = next;
                        next += 1;
                    }
                    map[c]
                })
                .collect();
            if best.as_ref().is_none_or(|b| rgs < *b) {
                best = Some(rgs);
            }
        }
        best.unwrap_or_default()
    }

    fn dfs(&mut self, i: usize, blocks: usize) -> Result<()> {
        let used = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if used > self.limit {
            return Err(Error::BudgetExceeded {
                budget: self.limit,
                progress: self.best.load(Ordering::Relaxed) as u64,
            });
        }
        if i > 0 && self.edges[i - 1].u + 1 == self.edges[i - 1].v {
            // Edges 0..i span K_k.
            let k = self.edges[i - 1].v + 1;
            if k >= self.pattern.n() {
                let psi = self.prefix_coloring(k, &self.labels[..i])?;
                if self.has_copy(&psi)? {
                    return Ok(());
                }
            }
            if i == self.edges.len() {
                if blocks > self.best.load(Ordering::Relaxed) {
                    self.best.fetch_max(blocks, Ordering::Relaxed);
                    self.found = Some(self.labels.clone());
                }
                return Ok(());
            }
            if self.symmetry && !self.perms[k].is_empty() {
                let canon = self.canonical(k);
                if !self.memo[k].insert(canon) {
                    return Ok(());
                }
            }
        }
        if blocks + (self.edges.len() - i) <= self.best.load(Ordering::Relaxed) {
            return Ok(());
        }
        for c in (0..=blocks).rev() {
            self.labels[i] = c;
            self.dfs(i + 1, blocks.max(c + 1))?;
        }
        Ok(())
    }
}

/// Exact `f(n, G | F)`: one more than the largest number of classes in a
/// partition of `E(K_n)` whose coloring has no `F`-colored copy of `G`.
///
/// Partitions are generated as restricted growth strings over the edges in
/// colex order. Whenever the colored edges span a complete `K_k`, a copy
/// already present there kills the whole branch, and a branch that cannot
/// exceed the best class count found is dropped.
pub fn f_exact_tiny(n: usize, g: &SimpleGraph, f: &FamilySpec, opts: ForcingOptions) -> Result<ForcingResult> {
    if !f.is_hereditary() {
        return Err(Error::Unsupported(format!(
            "exact forcing numbers need a hereditary family; {f} is not"
        )));
    }
    let limit = if opts.symmetry {
        SYMMETRY_LIMIT
    } else {
        EXHAUSTIVE_LIMIT
    };
    if n > limit {
        return Err(Error::TooLarge {
            what: "forcing-number host",
            size: n,
            limit,
        });
    }
    if g.n() > n {
        return Err(Error::Precondition(format!(
            "G has {} vertices, more than n = {n}",
            g.n()
        )));
    }
    let attestation = if opts.symmetry {
        Attestation::SymmetryPruned
    } else {
        Attestation::Exhaustive
    };
    if f.contains(g)? {
        return Ok(ForcingResult {
            n,
            f: 1,
            extremal_avoider: None,
            attestation,
            nodes: 0,
        });
    }
    let pattern = g.without_isolated();
    let edges = colex_edges(n);
    let perms: Vec<Vec<Vec<usize>>> = (0..=n)
        .map(|k| {
            if opts.symmetry && k >= 2 && k < n {
                permutations(k)
            } else {
                Vec::new()
            }
        })
        .collect();
    // Shard on the classes of the first few edges.
    let depth = edges.len().min(4);
    let mut prefixes: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..depth {
        prefixes = prefixes
            .into_iter()
            .flat_map(|p| {
                let top = p.iter().max().map_or(0, |&m| m + 1);
                (0..=top).rev().map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    let best = AtomicUsize::new(0);
    let nodes = AtomicU64::new(0);
    let run_shard = |prefix: &Vec<usize>| -> Result<Option<Vec<usize>>> {
        let mut labels = vec![0; edges.len()];
        labels[..prefix.len()].copy_from_slice(prefix);
        let mut scan = Scan {
            edges: &edges,
            pattern: &pattern,
            family: f,
            labels,
            best: &best,
            found: None,
            symmetry: opts.symmetry,
            perms: &perms,
            memo: vec![HashSet::new(); n + 1],
            nodes: &nodes,
            limit: opts.budget,
        };
        let blocks = prefix.iter().max().map_or(0, |&m| m + 1);
        scan.dfs(prefix.len(), blocks)?;
        Ok(scan.found)
    };
    let found: Vec<Option<Vec<usize>>> = if opts.jobs <= 1 {
        prefixes.iter().map(run_shard).collect::<Result<_>>()?
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::InvalidInput(format!("thread pool: {e}")))?
            .install(|| prefixes.par_iter().map(run_shard).collect::<Result<_>>())?
    };
    let avoider_labels = found
        .into_iter()
        .flatten()
        .max_by_key(|l| (l.iter().max().map_or(0, |&m| m + 1), std::cmp::Reverse(l.clone())));
    let scan_colors = |labels: &[usize]| -> Result<EdgeColoring> {
        let mut raw = vec![0; edges.len()];
        for (e, &c) in edges.iter().zip(labels) {
            raw[pair_index(n, e.u, e.v)] = c;
        }
        EdgeColoring::normalized(n, &raw)
    };
    let avoider = avoider_labels.as_deref().map(scan_colors).transpose()?;
    let top = best.load(Ordering::Relaxed);
    let avoider = match avoider {
        Some(a) if a.k() == top => a,
        _ => {
            return Err(Error::Invariant(
                "no avoiding partition recorded for the optimum".into(),
            ))
        }
    };
    if find_f_colored_copy(&avoider, &pattern, f, &mut Budget::unlimited())?.is_some() {
        return Err(Error::Invariant("recorded avoider contains a colored copy".into()));
    }
    // Merging two classes of an avoider must keep it avoiding.
    if avoider.k() >= 2 {
        let merged: Vec<usize> = avoider.colors().iter().map(|&c| if c == 1 { 0 } else { c }).collect();
        let merged = EdgeColoring::normalized(n, &merged)?;
        if find_f_colored_copy(&merged, &pattern, f, &mut Budget::unlimited())?.is_some() {
            return Err(Error::Invariant(
                "merging two avoider classes created a colored copy".into(),
            ));
        }
    }
    Ok(ForcingResult {
        n,
        f: top + 1,
        extremal_avoider: Some(avoider),
        attestation,
        nodes: nodes.load(Ordering::Relaxed),
    })
}

/// The deck lower-bound coloring with its certificate data.
#[derive(Debug, Clone)]
pub struct LowerBoundColoring {
    pub coloring: EdgeColoring,
    /// Subgraph-minimal deck members with isolated vertices removed.
    pub reduced_deck: Vec<SimpleGraph>,
    pub ex: TuranResult,
    /// The colored-copy search found no `F`-colored copy of `G`.
    pub certified: bool,
}

impl LowerBoundColoring {
    /// `f(n, G | F)` is at least this.
    pub fn certified_bound(&self) -> usize {
        self.coloring.k() + 1
    }
}

/// Colors an extremal graph for the reduced deck rainbow and everything
/// else with one extra color, so no copy of `G` can be `F`-colored.
pub fn lb_coloring(n: usize, g: &SimpleGraph, f: &FamilySpec, budget: &mut Budget) -> Result<LowerBoundColoring> {
    if f.contains(g)? {
        return Err(Error::Precondition(format!(
            "G is itself in {f}, so f(n, G | F) = 1 and there is no lower bound to build"
        )));
    }
    if !f.contains(&SimpleGraph::complete(2)?)? {
        return Err(Error::Precondition(format!("{f} must contain a single edge")));
    }
    if g.n() > n {
        return Err(Error::Precondition(format!(
            "G has {} vertices, more than n = {n}",
            g.n()
        )));
    }
    let deck = deck_with_scope(g, f, DeckScope::MaximalMembers, true, budget)?;
    let reduced = minimal_forbidden(&deck.members)?;
    let ex = ex_exact_small(n, &reduced, budget)?;
    if !ex.exact {
        return Err(Error::BudgetExceeded {
            budget: budget.limit(),
            progress: ex.value as u64,
        });
    }
    let r = &ex.extremal_graph;
    let fresh = r.edge_count();
    let mut raw = vec![fresh; n * (n - 1) / 2];
    for (c, e) in r.edges().iter().enumerate() {
        raw[pair_index(n, e.u, e.v)] = c;
    }
    let coloring = EdgeColoring::new(n, raw)?;
    if coloring.k() != fresh + 1 {
        return Err(Error::Invariant(
            "extremal graph is complete; the extra color is unused".into(),
        ));
    }
    if let Some(cert) = find_f_colored_copy(&coloring, g, f, budget)? {
        return Err(Error::Invariant(format!(
            "lower-bound coloring contains an F-colored copy at {:?}",
            cert.map
        )));
    }
    Ok(LowerBoundColoring {
        coloring,
        reduced_deck: reduced,
        ex,
        certified: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_graph, GraphSpec};

    fn g(s: GraphSpec) -> SimpleGraph {
        named_graph(&s).unwrap()
    }

    /// Brute force over all labeled colorings with exactly k colors for n = 4.
    fn brute_f(n: usize, pattern: &SimpleGraph, fam: &FamilySpec) -> usize {
        let m = n * (n - 1) / 2;
        let mut best = 0;
        let mut labels = vec![0usize; m];
        // All maps E -> 0..m, normalized; duplicates are harmless.
        loop {
            if let Ok(psi) = EdgeColoring::normalized(n, &labels) {
                if find_f_colored_copy(&psi, pattern, fam, &mut Budget::unlimited())
                    .unwrap()
                    .is_none()
                {
                    best = best.max(psi.k());
                }
            }
            let mut i = 0;
            while i < m {
                labels[i] += 1;
                if labels[i] < m {
                    break;
                }
                labels[i] = 0;
                i += 1;
            }
            if i == m {
                break;
            }
        }
        best + 1
    }

    #[test]
    fn agrees_with_labeled_brute_force_on_k4() {
        let cases = [
            (g(GraphSpec::Complete(3)), FamilySpec::Matchings),
            (g(GraphSpec::Complete(3)), FamilySpec::SingleEdge),
            (g(GraphSpec::Path(4)), FamilySpec::SingleEdge),
            (g(GraphSpec::Cycle(4)), FamilySpec::Matchings),
        ];
        for (pat, fam) in &cases {
            let r = f_exact_tiny(4, pat, fam, ForcingOptions::default()).unwrap();
            assert_eq!(r.f, brute_f(4, pat, fam));
        }
    }

    #[test]
    fn member_gives_one_and_errors() {
        let r = f_exact_tiny(
            4,
            &g(GraphSpec::Matching(2)),
            &FamilySpec::Matchings,
            ForcingOptions::default(),
        )
        .unwrap();
        assert_eq!(r.f, 1);
        assert!(r.extremal_avoider.is_none());
        let k3 = g(GraphSpec::Complete(3));
        assert!(f_exact_tiny(6, &k3, &FamilySpec::Matchings, ForcingOptions::default()).is_err());
        assert!(f_exact_tiny(4, &k3, &FamilySpec::OddGraphs, ForcingOptions::default()).is_err());
        assert!(f_exact_tiny(2, &k3, &FamilySpec::Matchings, ForcingOptions::default()).is_err());
    }

    #[test]
    fn symmetry_and_threads_agree() {
        let k3 = g(GraphSpec::Complete(3));
        let plain = f_exact_tiny(5, &k3, &FamilySpec::Matchings, ForcingOptions::default()).unwrap();
        let sym = f_exact_tiny(
            5,
            &k3,
            &FamilySpec::Matchings,
            ForcingOptions {
                symmetry: true,
                jobs: 2,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(plain.f, 5);
        assert_eq!(sym.f, 5);
        assert_eq!(sym.attestation, Attestation::SymmetryPruned);
    }

    #[test]
    fn lower_bound_examples() {
        let lb = lb_coloring(
            5,
            &g(GraphSpec::Complete(3)),
            &FamilySpec::SingleEdge,
            &mut Budget::default(),
        )
        .unwrap();
        assert_eq!(lb.coloring.k(), 3);
        assert_eq!(lb.ex.value, 2);
        assert!(lb_coloring(
            5,
            &g(GraphSpec::Matching(2)),
            &FamilySpec::Matchings,
            &mut Budget::default()
        )
        .is_err());
    }

    #[test]
    fn json_shape() {
        let r = f_exact_tiny(
            4,
            &g(GraphSpec::Complete(3)),
            &FamilySpec::Matchings,
            ForcingOptions::default(),
        )
        .unwrap();
        let v = r.to_json(Some("av.txt"));
        assert_eq!(v["f"], r.f);
        assert_eq!(v["avoider_colors"], r.f - 1);
        assert_eq!(v["attestation"], "exhaustive");
        assert_eq!(v["avoider_file"], "av.txt");
    }
}
