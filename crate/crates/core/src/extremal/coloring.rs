//! Edge colorings of complete graphs.
//!
//! Text format: a header `n k`, then one line `u v c` for each of the
//! `C(n,2)` edges of `K_n`, in any order, with `c` in `0..k`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::io::{data_lines, parse_fields};
use crate::graph::{Edge, MAX_VERTICES};

/// Position of `{u, v}` in the lexicographic list of edges of `K_n`.
#[inline]
pub fn pair_index(n: usize, u: usize, v: usize) -> usize {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

/// Surjective coloring of `E(K_n)` onto `0..k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    n: usize,
    colors: Vec<usize>,
    k: usize,
}

impl EdgeColoring {
    /// `colors` is indexed by [`pair_index`]. Every id in `0..=max` must occur.
    pub fn new(n: usize, colors: Vec<usize>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "edge coloring host",
                size: n,
                limit: MAX_VERTICES,
            });
        }
        let expected = n * n.saturating_sub(1) / 2;
        if colors.len() != expected {
            return Err(Error::InvalidInput(format!(
                "K_{n} has {expected} edges but {} colors were given",
                colors.len()
            )));
        }
        let k = colors.iter().max().map_or(0, |&c| c + 1);
        let mut seen = vec![false; k];
        for &c in &colors {
            seen[c] = true;
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidInput(format!(
                "color {missing} is unused; colors must be exactly 0..{k}"
            )));
        }
        Ok(EdgeColoring { n, colors, k })
    }

    /// Relabels arbitrary ids to `0..k` in order of first appearance.
    pub fn normalized(n: usize, raw: &[usize]) -> Result<Self> {
        let mut map = std::collections::HashMap::new();
        let colors = raw
            .iter()
            .map(|c| {
                let next = map.len();
                *map.entry(*c).or_insert(next)
            })
            .collect();
        EdgeColoring::new(n, colors)
    }

    pub fn rainbow(n: usize) -> Result<Self> {
        EdgeColoring::new(n, (0..n * n.saturating_sub(1) / 2).collect())
    }

    pub fn monochromatic(n: usize) -> Result<Self> {
        EdgeColoring::new(n, vec![0; n * n.saturating_sub(1) / 2])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of colors used.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    #[inline]
    pub fn color(&self, u: usize, v: usize) -> usize {
        self.colors[pair_index(self.n, u, v)]
    }

    /// Edges of `K_n` in lexicographic order, matching [`Self::colors`].
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let n = self.n;
        (0..n).flat_map(move |u| (u + 1..n).map(move |v| Edge { u, v }))
    }

    /// The edges of every color class.
    pub fn classes(&self) -> Vec<Vec<Edge>> {
        let mut out = vec![Vec::new(); self.k];
        for (e, &c) in self.edges().zip(&self.colors) {
            out[c].push(e);
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = data_lines(text);
        let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header"))?;
        let [n, k] = parse_fields::<2>(hl, header)?;
        if n > MAX_VERTICES {
            return Err(Error::parse(hl, format!("n = {n} exceeds {MAX_VERTICES}")));
        }
        let total = n * n.saturating_sub(1) / 2;
        let mut colors = vec![usize::MAX; total];
        for (ln, content) in lines {
            let [u, v, c] = parse_fields::<3>(ln, content)?;
            if u >= n || v >= n || u == v {
                return Err(Error::parse(ln, format!("{u} {v} is not an edge of K_{n}")));
            }
            if c >= k {
                return Err(Error::parse(ln, format!("color {c} outside 0..{k}")));
            }
            let slot = &mut colors[pair_index(n, u, v)];
            if *slot != usize::MAX {
                return Err(Error::parse(ln, format!("edge {u} {v} colored twice")));
            }
            *slot = c;
        }
        if let Some(i) = colors.iter().position(|&c| c == usize::MAX) {
            let e = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).nth(i).unwrap();
            return Err(Error::parse(hl, format!("edge {} {} has no color", e.0, e.1)));
        }
        let col = EdgeColoring::new(n, colors)?;
        if col.k != k {
            return Err(Error::parse(hl, format!("header announces {k} colors, {} used", col.k)));
        }
        Ok(col)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, self.k);
        for (e, c) in self.edges().zip(&self.colors) {
            let _ = writeln!(out, "{} {} {}", e.u, e.v, c);
        }
        out
    }
}
