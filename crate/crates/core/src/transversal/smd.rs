//! Digraphs without independent transversals, certifying lower bounds on
//! `s(m, d)`: the least part size forcing an independent transversal in
//! every `m`-part digraph with out-degree at most `d`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::{find_transversal_exact, PartedDigraph};
use crate::error::{Budget, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SmdVariant {
    /// `s = (m-1) d`: every vertex outside the last part points into a
    /// dedicated `d`-block of the last part.
    Basic,
    /// `s = (m-1)(d+1)` for `3 <= m <= d`.
    SmallM,
    /// `s = m d` when `(m-1) | d`.
    Divisible,
}

impl fmt::Display for SmdVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SmdVariant::Basic => "basic",
            SmdVariant::SmallM => "small_m",
            SmdVariant::Divisible => "divisible",
        })
    }
}

impl FromStr for SmdVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "basic" => Ok(SmdVariant::Basic),
            "small_m" | "smallm" => Ok(SmdVariant::SmallM),
            "divisible" => Ok(SmdVariant::Divisible),
            other => Err(Error::InvalidInput(format!(
                "unknown variant {other:?}; expected basic, small_m or divisible"
            ))),
        }
    }
}

impl Serialize for SmdVariant {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone)]
pub struct SmdRecord {
    pub m: usize,
    pub d: usize,
    pub variant: SmdVariant,
    pub digraph: PartedDigraph,
    pub claimed_s: usize,
    /// `Some(true)` once the exact search has ruled out every transversal;
    /// `None` when the search ran out of budget.
    pub verified: Option<bool>,
}

impl SmdRecord {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "m": self.m,
            "d": self.d,
            "variant": self.variant,
            "s": self.claimed_s,
            "delta_plus": self.digraph.delta_plus(),
            "arcs": self.digraph.arc_count(),
            "verified": self.verified,
            "lower_bound": self.claimed_s + 1,
        })
    }
}

fn basic(m: usize, d: usize) -> Vec<(usize, usize)> {
    let s = (m - 1) * d;
    let last = (m - 1) * s;
    let mut arcs = Vec::new();
    for i in 0..m - 1 {
        for v in i * s..(i + 1) * s {
            arcs.extend((0..d).map(|t| (v, last + i * d + t)));
        }
    }
    arcs
}

fn small_m(m: usize, d: usize) -> Vec<(usize, usize)> {
    let s = (m - 1) * (d + 1);
    let last = (m - 1) * s;
    // v_{m,i,j} is last + i (d+1) + j; A_{i,j} is offsets j (m-1).. of part i.
    let hub = |i: usize, j: usize| last + i * (d + 1) + j;
    let mut arcs = Vec::new();
    for i in 0..m - 1 {
        for j in 0..=d {
            let block = (i * s + j * (m - 1))..(i * s + (j + 1) * (m - 1));
            for v in block.clone() {
                arcs.extend((0..=d).filter(|&t| t != j).map(|t| (v, hub(i, t))));
            }
            arcs.extend(block.map(|v| (hub(i, j), v)));
        }
    }
    arcs
}

fn divisible(m: usize, d: usize) -> Vec<(usize, usize)> {
    let k = d / (m - 1);
    let s = m * d;
    let last = (m - 1) * s;
    // V_{j,l} is offsets l d.. of part j; V_{m,j,l} is last + j m k + l k.
    let group = |j: usize, l: usize| (j * s + l * d)..(j * s + (l + 1) * d);
    let hub = |j: usize, l: usize| (last + j * m * k + l * k)..(last + j * m * k + (l + 1) * k);
    let mut arcs = Vec::new();
    for j in 0..m - 1 {
        for l in 0..m {
            for v in hub(j, l) {
                arcs.extend(group(j, l).map(|w| (v, w)));
            }
            for w in group(j, l) {
                for l2 in (0..m).filter(|&l2| l2 != l) {
                    arcs.extend(hub(j, l2).map(|v| (w, v)));
                }
            }
        }
    }
    arcs
}

/// Builds the requested construction and, budget permitting, confirms by
/// exact search that it has no independent transversal.
pub fn smd_construct(m: usize, d: usize, variant: SmdVariant, budget: &mut Budget) -> Result<SmdRecord> {
    let bad = |why: &str| {
        Err(Error::Precondition(format!(
            "{variant} construction needs {why}, got m = {m}, d = {d}"
        )))
    };
    let (s, arcs) = match variant {
        SmdVariant::Basic => {
            if m < 3 || d < 1 {
                return bad("m >= 3 and d >= 1");
            }
            ((m - 1) * d, basic(m, d))
        }
        SmdVariant::SmallM => {
            if m < 3 || m > d {
                return bad("3 <= m <= d");
            }
            ((m - 1) * (d + 1), small_m(m, d))
        }
        SmdVariant::Divisible => {
            if m < 2 || d < 1 || !d.is_multiple_of(m - 1) {
                return bad("m >= 2, d >= 1 and (m - 1) dividing d");
            }
            (m * d, divisible(m, d))
        }
    };
    let digraph = PartedDigraph::new(m, s, arcs)?;
    if digraph.delta_plus() > d || digraph.dropped_intra() != 0 {
        return Err(Error::Invariant(format!(
            "{variant} construction has out-degree {}",
            digraph.delta_plus()
        )));
    }
    let verified = match find_transversal_exact(&digraph, 1, budget) {
        Ok(None) => Some(true),
        Ok(Some(t)) => {
            return Err(Error::Invariant(format!(
                "{variant} construction for m = {m}, d = {d} admits transversal {:?}",
                t.chosen
            )))
        }
        Err(Error::BudgetExceeded { .. }) | Err(Error::Precondition(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(SmdRecord {
        m,
        d,
        variant,
        digraph,
        claimed_s: s,
        verified,
    })
}

/// Outcome of scanning every 3-part digraph with out-degree at most 1.
#[derive(Debug, Clone)]
pub struct ExhaustiveScan {
    pub s: usize,
    /// Instances examined after fixing the first vertex's arc by symmetry.
    pub instances: u64,
    /// Instances without an independent transversal.
    pub failures: u64,
    pub first_failure: Option<PartedDigraph>,
}

/// Decides whether every digraph on three parts of size `s` (1 to 3) with
/// out-degree at most 1 has an independent transversal.
///
/// Each vertex independently has no arc or one arc to any of the `2s`
/// vertices outside its part. Up to swapping the other two parts and
/// permuting inside them, vertex 0 has no arc or the arc `0 -> s`, which
/// leaves `2 (2s+1)^(3s-1)` instances. An instance is encoded by the
/// bitmask of the `s^3` transversals each arc destroys.
pub fn scan_s3_d1(s: usize, jobs: Option<usize>) -> Result<ExhaustiveScan> {
    if !(1..=3).contains(&s) {
        return Err(Error::InvalidInput(format!("part size {s} outside 1..=3")));
    }
    let n = 3 * s;
    let options = 2 * s + 1;
    let targets: Vec<Vec<usize>> = (0..n).map(|v| (0..n).filter(|&w| w / s != v / s).collect()).collect();
    let triple_mask = |u: usize, w: usize| -> u32 {
        let mut mask = 0u32;
        for a in 0..s {
            for b in 0..s {
                for c in 0..s {
                    let t = [a, s + b, 2 * s + c];
                    if t.contains(&u) && t.contains(&w) {
                        mask |= 1 << (a * s * s + b * s + c);
                    }
                }
            }
        }
        mask
    };
    // kill[v][o]: transversals destroyed when vertex v takes option o.
    let kill: Vec<Vec<u32>> = (0..n)
        .map(|v| {
            std::iter::once(0)
                .chain(targets[v].iter().map(|&w| triple_mask(v, w)))
                .collect()
        })
        .collect();
    let full: u32 = if s == 3 { (1 << 27) - 1 } else { (1 << (s * s * s)) - 1 };
    let free = (n - 1) as u32;
    let inner = (options as u64).pow(free - 1);
    let first_options = [
        0usize,
        1 + targets[0].iter().position(|&w| w == s).expect("vertex s is a target"),
    ];

    // Shard by (vertex 0 option, vertex 1 option).
    let shards: Vec<(usize, usize)> = first_options
        .iter()
        .flat_map(|&o0| (0..options).map(move |o1| (o0, o1)))
        .collect();
    let scan_shard = |&(o0, o1): &(usize, usize)| -> (u64, u64, Option<Vec<usize>>) {
        let base = kill[0][o0] | kill[1][o1];
        let mut failures = 0;
        let mut first = None;
        let mut digits = vec![0usize; n - 2];
        for _ in 0..inner {
            let mask = digits.iter().enumerate().fold(base, |m, (i, &o)| m | kill[i + 2][o]);
            if mask == full {
                failures += 1;
                if first.is_none() {
                    let mut choice = vec![o0, o1];
                    choice.extend(&digits);
                    first = Some(choice);
                }
            }
            for dgt in digits.iter_mut() {
                *dgt += 1;
                if *dgt < options {
                    break;
                }
                *dgt = 0;
            }
        }
        (inner, failures, first)
    };
    let run = || {
        shards
            .par_iter()
            .map(scan_shard)
            .reduce(|| (0, 0, None), |a, b| (a.0 + b.0, a.1 + b.1, a.2.or(b.2)))
    };
    let (instances, failures, first) = match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| Error::InvalidInput(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    };
    let first_failure = first
        .map(|choice| {
            let arcs = choice
                .iter()
                .enumerate()
                .filter(|&(_, &o)| o > 0)
                .map(|(v, &o)| (v, targets[v][o - 1]));
            PartedDigraph::new(3, s, arcs)
        })
        .transpose()?;
    Ok(ExhaustiveScan {
        s,
        instances,
        failures,
        first_failure,
    })
}
