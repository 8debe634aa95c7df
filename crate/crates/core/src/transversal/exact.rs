use super::{PartedDigraph, Transversal};
use crate::error::{Budget, Error, Result};

/// Largest search space accepted, as a power of two.
const SEARCH_SPACE_BITS: f64 = 64.0;

fn log2_binomial(n: usize, k: usize) -> f64 {
    (0..k).map(|i| ((n - i) as f64 / (i + 1) as f64).log2()).sum()
}

struct Search<'a> {
    d: &'a PartedDigraph,
    fold: usize,
    /// Number of chosen neighbours (either direction) of each vertex.
    blocked: Vec<u32>,
    /// Unblocked vertices left in each part.
    free: Vec<usize>,
    assigned: Vec<bool>,
    chosen: Vec<Vec<usize>>,
    budget: &'a mut Budget,
}

impl Search<'_> {
    fn block(&mut self, v: usize, delta: i32) {
        let d = self.d;
        for &w in d.out(v).iter().chain(d.inn(v)) {
            let before = self.blocked[w];
            self.blocked[w] = (before as i32 + delta) as u32;
            let p = d.part(w);
            match (before, self.blocked[w]) {
                (0, 1) => self.free[p] -= 1,
                (1, 0) => self.free[p] += 1,
                _ => {}
            }
        }
    }

    fn search(&mut self, placed: usize) -> Result<bool> {
        self.budget.tick(placed as u64)?;
        if placed == self.d.m() {
            return Ok(true);
        }
        // Most constrained part first.
        let p = (0..self.d.m())
            .filter(|&p| !self.assigned[p])
            .min_by_key(|&p| self.free[p])
            .expect("an unassigned part remains");
        if self.free[p] < self.fold {
            return Ok(false);
        }
        let cands: Vec<usize> = self.d.part_range(p).filter(|&v| self.blocked[v] == 0).collect();
        self.assigned[p] = true;
        let found = self.combine(p, &cands, 0, self.fold, placed)?;
        self.assigned[p] = false;
        Ok(found)
    }

    fn combine(&mut self, p: usize, cands: &[usize], start: usize, need: usize, placed: usize) -> Result<bool> {
        if need == 0 {
            return self.search(placed + 1);
        }
        for i in start..=cands.len() - need {
            self.budget.tick(placed as u64)?;
            let v = cands[i];
            self.block(v, 1);
            self.chosen[p].push(v);
            let viable = (0..self.d.m()).all(|q| self.assigned[q] || self.free[q] >= self.fold);
            if viable && self.combine(p, cands, i + 1, need - 1, placed)? {
                return Ok(true);
            }
            self.chosen[p].pop();
            self.block(v, -1);
        }
        Ok(false)
    }
}

/// Complete search for a transversal with `fold` vertices per part.
///
/// Returns `Ok(None)` only after the whole space has been ruled out. Parts
/// are filled most-constrained first and a choice is abandoned as soon as
/// some unfilled part has fewer than `fold` unblocked vertices left.
pub fn find_transversal_exact(d: &PartedDigraph, fold: usize, budget: &mut Budget) -> Result<Option<Transversal>> {
    if fold == 0 {
        return Err(Error::InvalidInput("fold must be at least 1".into()));
    }
    if fold > d.s() {
        return Ok(None);
    }
    let bits = d.m() as f64 * log2_binomial(d.s(), fold);
    if bits > SEARCH_SPACE_BITS {
        return Err(Error::Precondition(format!(
            "search space of about 2^{bits:.0} candidate sets exceeds 2^{SEARCH_SPACE_BITS}"
        )));
    }
    let mut s = Search {
        d,
        fold,
        blocked: vec![0; d.order()],
        free: vec![d.s(); d.m()],
        assigned: vec![false; d.m()],
        chosen: vec![Vec::new(); d.m()],
        budget,
    };
    if !s.search(0)? {
        return Ok(None);
    }
    let mut chosen = s.chosen;
    for part in &mut chosen {
        part.sort_unstable();
    }
    let t = Transversal { fold, chosen };
    if !t.verify(d) {
        return Err(Error::Invariant("exact search produced a dependent transversal".into()));
    }
    Ok(Some(t))
}
