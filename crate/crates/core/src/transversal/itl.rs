//! Derandomized independent transversals.
//!
//! Parts are filled in order. After `j` parts are fixed there are `s^(m-j)`
//! completions, and every arc still alive destroys a predictable number of
//! them: `s^(m-j-2)` if neither end is fixed, `s^(m-j-1)` if one end is a
//! chosen vertex, `s^(m-j)` if both are. Writing the destroyed total as
//! `s^(m-j-2) * Q` with
//!
//! ```text
//! Q = (#free arcs) + s * (#arcs at one chosen vertex) + s^2 * (#arcs between chosen vertices)
//! ```
//!
//! keeps all bookkeeping in small integers. Averaged over the `s` candidates
//! of the next part, the new `Q` equals the old one, so the minimizing
//! candidate never increases it, and `Q < s^2` (some completion survives) is
//! preserved from the first step, where it is exactly `#arcs < s^2`.

use super::{PartedDigraph, Transversal};
use crate::error::{Error, Result};

/// The normalized destroyed mass `Q` before the first and after every step,
/// together with the threshold `s^2` it must stay below.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ItlTrace {
    pub threshold: u128,
    pub destroyed: Vec<u128>,
    /// Union-bound count of completions without an arc after each step,
    /// saturating at `u128::MAX`.
    pub surviving: Vec<u128>,
}

fn surviving(s: u128, threshold: u128, q: u128, exponent: i64) -> u128 {
    let spare = threshold - q;
    if exponent >= 0 {
        let mut out = spare;
        for _ in 0..exponent {
            out = out.saturating_mul(s);
        }
        out
    } else {
        spare / s.pow((-exponent) as u32)
    }
}

/// One transversal of the sub-digraph induced by the `alive` vertices,
/// which must number `s_eff` in every part.
fn derandomize(d: &PartedDigraph, alive: &[bool], s_eff: usize) -> Result<(Vec<usize>, ItlTrace)> {
    let m = d.m();
    let s = s_eff as u128;
    let threshold = s * s;
    let mut sel: Vec<Option<usize>> = vec![None; m];
    let live_arc = |u: usize, v: usize| alive[u] && alive[v];

    let mut q: u128 = d.arcs().filter(|&(u, v)| live_arc(u, v)).count() as u128;
    let mut trace = ItlTrace {
        threshold,
        destroyed: vec![q],
        surviving: Vec::new(),
    };
    let check = |q: u128, step: usize| -> Result<()> {
        if q >= threshold {
            return Err(Error::Invariant(format!(
                "no completion certified after {step} parts (destroyed mass {q} >= {threshold})"
            )));
        }
        Ok(())
    };
    check(q, 0)?;
    trace.surviving.push(surviving(s, threshold, q, m as i64 - 2));

    // Contribution of a live arc given the current selection.
    let weight = |sel: &[Option<usize>], u: usize, v: usize| -> u128 {
        let state = |x: usize| match sel[d.part(x)] {
            None => Some(false),
            Some(c) if c == x => Some(true),
            Some(_) => None,
        };
        match (state(u), state(v)) {
            (None, _) | (_, None) => 0,
            (Some(false), Some(false)) => 1,
            (Some(true), Some(true)) => threshold,
            _ => s,
        }
    };

    for p in 0..m {
        let range = d.part_range(p);
        let mut base = q;
        for x in range.clone().filter(|&x| alive[x]) {
            for &y in d.out(x).iter().filter(|&&y| alive[y]) {
                base -= weight(&sel, x, y);
            }
            for &y in d.inn(x).iter().filter(|&&y| alive[y]) {
                base -= weight(&sel, y, x);
            }
        }
        let mut best: Option<(u128, usize)> = None;
        for v in range.filter(|&v| alive[v]) {
            let mut qv = base;
            for &w in d.out(v).iter().chain(d.inn(v)).filter(|&&w| alive[w]) {
                qv += match sel[d.part(w)] {
                    None => s,
                    Some(c) if c == w => threshold,
                    Some(_) => 0,
                };
            }
            if best.is_none_or(|(b, _)| qv < b) {
                best = Some((qv, v));
            }
        }
        let (qv, v) = best.ok_or_else(|| Error::Invariant(format!("part {p} has no live vertex")))?;
        sel[p] = Some(v);
        q = qv;
        check(q, p + 1)?;
        trace.destroyed.push(q);
        trace
            .surviving
            .push(surviving(s, threshold, q, m as i64 - p as i64 - 3));
    }
    Ok((
        sel.into_iter().map(|v| v.expect("every part selected")).collect(),
        trace,
    ))
}

/// Independent transversal for `s > m * Δ⁺`, found without search.
pub fn itl_transversal(d: &PartedDigraph) -> Result<Transversal> {
    itl_transversal_traced(d).map(|(t, _)| t)
}

pub fn itl_transversal_traced(d: &PartedDigraph) -> Result<(Transversal, ItlTrace)> {
    let (m, s, dp) = (d.m(), d.s(), d.delta_plus());
    if s <= m * dp {
        return Err(Error::Precondition(format!(
            "need s > m * delta+, got s = {s}, m = {m}, delta+ = {dp}"
        )));
    }
    let (picks, trace) = derandomize(d, &vec![true; d.order()], s)?;
    let t = Transversal {
        fold: 1,
        chosen: picks.into_iter().map(|v| vec![v]).collect(),
    };
    if !t.verify(d) {
        return Err(Error::Invariant("derandomized transversal is not independent".into()));
    }
    Ok((t, trace))
}

/// Largest independent set of a graph on at most 64 nodes.
fn max_independent(adj: &[u64]) -> u64 {
    fn go(adj: &[u64], cand: u64, cur: u64, best: &mut u64) {
        if cand == 0 {
            if cur.count_ones() > best.count_ones() {
                *best = cur;
            }
            return;
        }
        if cur.count_ones() + cand.count_ones() <= best.count_ones() {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        go(adj, cand & !(1 << v) & !adj[v], cur | 1 << v, best);
        go(adj, cand & !(1 << v), cur, best);
    }
    let mut best = 0;
    let all = if adj.len() == 64 {
        u64::MAX
    } else {
        (1u64 << adj.len()) - 1
    };
    go(adj, all, 0, &mut best);
    best
}

/// Transversal with `r` vertices per part for `s >= (2r + m) Δ⁺ + r`.
///
/// Peels `k = s - m Δ⁺` disjoint transversals, links two of them when an
/// arc runs between them, and unions `r` pairwise unlinked ones, picked by
/// the greedy minimum-degree rule. Should the greedy set fall short, an
/// exact maximum independent set of the link graph is tried before giving
/// up.
pub fn itl_multifold(d: &PartedDigraph, r: usize) -> Result<Transversal> {
    let (m, s, dp) = (d.m(), d.s(), d.delta_plus());
    if r == 0 {
        return Err(Error::InvalidInput("fold must be at least 1".into()));
    }
    if s < (2 * r + m) * dp + r {
        return Err(Error::Precondition(format!(
            "need s >= (2r + m) * delta+ + r = {}, got s = {s} (m = {m}, r = {r}, delta+ = {dp})",
            (2 * r + m) * dp + r
        )));
    }
    let k = s - m * dp;
    let mut alive = vec![true; d.order()];
    let mut owner = vec![usize::MAX; d.order()];
    let mut layers = Vec::with_capacity(k);
    for i in 0..k {
        let (picks, _) = derandomize(d, &alive, s - i)?;
        for &v in &picks {
            alive[v] = false;
            owner[v] = i;
        }
        layers.push(picks);
    }

    let mut links = vec![std::collections::BTreeSet::new(); k];
    for (u, v) in d.arcs() {
        let (a, b) = (owner[u], owner[v]);
        if a != usize::MAX && b != usize::MAX && a != b {
            links[a].insert(b);
            links[b].insert(a);
        }
    }
    let mut removed = vec![false; k];
    let mut picked = Vec::new();
    while let Some(x) = (0..k)
        .filter(|&x| !removed[x])
        .min_by_key(|&x| links[x].iter().filter(|&&y| !removed[y]).count())
    {
        picked.push(x);
        removed[x] = true;
        for &y in &links[x] {
            removed[y] = true;
        }
    }
    if picked.len() < r && k <= 64 {
        let adj: Vec<u64> = links.iter().map(|l| l.iter().fold(0u64, |a, &y| a | 1 << y)).collect();
        let best = max_independent(&adj);
        picked = (0..k).filter(|&x| best >> x & 1 == 1).collect();
    }
    if picked.len() < r {
        return Err(Error::Invariant(format!(
            "only {} of {k} peeled transversals are pairwise unlinked, {r} needed",
            picked.len()
        )));
    }
    picked.sort_unstable();
    let mut chosen = vec![Vec::with_capacity(r); m];
    for &x in &picked[..r] {
        for (p, &v) in layers[x].iter().enumerate() {
            chosen[p].push(v);
        }
    }
    for part in &mut chosen {
        part.sort_unstable();
    }
    let t = Transversal { fold: r, chosen };
    if !t.verify(d) {
        return Err(Error::Invariant("multifold transversal is not independent".into()));
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Budget;
    use crate::transversal::find_transversal_exact;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn arcless_picks_first_vertices() {
        let d = PartedDigraph::arcless(3, 4).unwrap();
        let t = itl_transversal(&d).unwrap();
        assert_eq!(t.chosen, vec![vec![0], vec![4], vec![8]]);
        let t2 = itl_multifold(&d, 2).unwrap();
        assert_eq!(t2.chosen, vec![vec![0, 1], vec![4, 5], vec![8, 9]]);
    }

    #[test]
    fn shift_pattern_two_parts() {
        // Part 0 = {0,1,2}, part 1 = {3,4,5}; i -> 3 + (i + 1) % 3 and back.
        let arcs = (0..3).flat_map(|i| [(i, 3 + (i + 1) % 3), (3 + i, (i + 2) % 3)]);
        let d = PartedDigraph::new(2, 3, arcs).unwrap();
        assert_eq!(d.delta_plus(), 1);
        let t = itl_transversal(&d).unwrap();
        assert!(t.verify(&d));
        assert!(find_transversal_exact(&d, 1, &mut Budget::default()).unwrap().is_some());
    }

    #[test]
    fn precondition_reports_parameters() {
        let d = PartedDigraph::new(2, 2, [(0, 2), (2, 0)]).unwrap();
        let msg = itl_transversal(&d).unwrap_err().to_string();
        assert!(
            msg.contains("s = 2") && msg.contains("m = 2") && msg.contains("delta+ = 1"),
            "{msg}"
        );
        assert!(matches!(itl_multifold(&d, 1), Err(Error::Precondition(_))));
    }

    #[test]
    fn trace_stays_below_threshold_and_never_grows() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let m = rng.gen_range(2..=5);
            let dp = rng.gen_range(1..=3);
            let d = PartedDigraph::random(m, m * dp + 1, dp, &mut rng).unwrap();
            let (t, trace) = itl_transversal_traced(&d).unwrap();
            assert!(t.verify(&d));
            assert_eq!(trace.destroyed.len(), m + 1);
            assert!(trace.destroyed.windows(2).all(|w| w[1] <= w[0]));
            assert!(trace.destroyed.iter().all(|&q| q < trace.threshold));
            assert!(trace.surviving.iter().all(|&c| c > 0));
            assert_eq!(*trace.destroyed.last().unwrap(), 0);
        }
    }

    #[test]
    fn multifold_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let d = PartedDigraph::random(2, 9, 1, &mut rng).unwrap();
            let t = itl_multifold(&d, 2).unwrap();
            assert_eq!(t.fold, 2);
            assert!(t.verify(&d));
        }
        for _ in 0..20 {
            let d = PartedDigraph::random(3, 6, 1, &mut rng).unwrap();
            assert!(itl_multifold(&d, 1).unwrap().verify(&d));
        }
    }

    #[test]
    fn max_independent_small() {
        // 5-cycle: independence number 2.
        let adj: Vec<u64> = (0..5).map(|i| 1 << ((i + 1) % 5) | 1 << ((i + 4) % 5)).collect();
        assert_eq!(max_independent(&adj).count_ones(), 2);
    }
}
