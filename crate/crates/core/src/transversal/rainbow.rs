use std::collections::HashMap;

use serde::Serialize;

use super::{itl_transversal, PartedDigraph};
use crate::error::{Error, Result};
use crate::extremal::EdgeColoring;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RainbowCutResult {
    pub p: usize,
    /// Blocks per class.
    pub s: usize,
    /// `X_1, ..., X_m`, each `p` vertices of the matching input class.
    pub classes: Vec<Vec<usize>>,
    /// Index of the chosen block inside each class.
    pub blocks: Vec<usize>,
    /// Maximum out-degree of the block digraph.
    pub block_delta_plus: usize,
}

/// True when no color used inside some `X_i` appears on an edge between two
/// different output classes.
pub fn verify_rainbow_cut(psi: &EdgeColoring, classes: &[Vec<usize>]) -> bool {
    let mut inside = std::collections::HashSet::new();
    for x in classes {
        for (i, &a) in x.iter().enumerate() {
            for &b in &x[i + 1..] {
                inside.insert(psi.color(a, b));
            }
        }
    }
    classes.iter().enumerate().all(|(i, x)| {
        classes[i + 1..]
            .iter()
            .all(|y| x.iter().all(|&a| y.iter().all(|&b| !inside.contains(&psi.color(a, b)))))
    })
}

/// Finds `p`-subsets `X_i` of the classes whose interior colors avoid the
/// multipartite graph spanned by the `X_i`.
///
/// The classes (size `q` each) must partition the vertices of the host and
/// span a rainbow complete multipartite graph. With `s = None` the class
/// size must be `m p^3` and `m p^2` blocks are used; an explicit `s` needs
/// `q = s p` and `s > 2 m C(p,2)`.
pub fn rainbow_cut(psi: &EdgeColoring, classes: &[Vec<usize>], p: usize, s: Option<usize>) -> Result<RainbowCutResult> {
    let m = classes.len();
    if m == 0 || p == 0 {
        return Err(Error::InvalidInput("need at least one class and p >= 1".into()));
    }
    let q = classes[0].len();
    if classes.iter().any(|c| c.len() != q) {
        return Err(Error::InvalidInput("classes must have equal size".into()));
    }
    let mut owner = vec![usize::MAX; psi.n()];
    for (i, c) in classes.iter().enumerate() {
        for &v in c {
            if v >= psi.n() || owner[v] != usize::MAX {
                return Err(Error::InvalidInput(format!(
                    "vertex {v} is out of range or in two classes"
                )));
            }
            owner[v] = i;
        }
    }
    if owner.contains(&usize::MAX) {
        return Err(Error::InvalidInput(
            "classes must cover every vertex of the host".into(),
        ));
    }
    let pairs = p * (p - 1) / 2;
    let s = match s {
        None => {
            if q != m * p.pow(3) {
                return Err(Error::Precondition(format!(
                    "default parameters need class size m p^3 = {}, got {q}",
                    m * p.pow(3)
                )));
            }
            m * p * p
        }
        Some(s) => {
            if q != s * p || s <= 2 * m * pairs {
                return Err(Error::Precondition(format!(
                    "need class size s p = {} and s > 2 m C(p,2) = {}, got q = {q}, s = {s}",
                    s * p,
                    2 * m * pairs
                )));
            }
            s
        }
    };

    // Where each color sits in K; K must use every color at most once.
    let mut in_k: HashMap<usize, (usize, usize)> = HashMap::new();
    for a in 0..psi.n() {
        for b in a + 1..psi.n() {
            if owner[a] != owner[b] {
                let c = psi.color(a, b);
                if let Some((x, y)) = in_k.insert(c, (a, b)) {
                    return Err(Error::InvalidInput(format!(
                        "the multipartite graph is not rainbow: color {c} is on {x}-{y} and {a}-{b}"
                    )));
                }
            }
        }
    }

    // Block (i, j) is vertex i * s + j of the block digraph.
    let mut block_of = vec![0usize; psi.n()];
    for (i, c) in classes.iter().enumerate() {
        for (pos, &v) in c.iter().enumerate() {
            block_of[v] = i * s + pos / p;
        }
    }
    let mut arcs = Vec::new();
    for (i, c) in classes.iter().enumerate() {
        for j in 0..s {
            let block = &c[j * p..(j + 1) * p];
            for (t, &a) in block.iter().enumerate() {
                for &b in &block[t + 1..] {
                    if let Some(&(x, y)) = in_k.get(&psi.color(a, b)) {
                        arcs.push((i * s + j, block_of[x]));
                        arcs.push((i * s + j, block_of[y]));
                    }
                }
            }
        }
    }
    let digraph = PartedDigraph::new(m, s, arcs)?;
    if digraph.delta_plus() > 2 * pairs {
        return Err(Error::Invariant(format!(
            "block digraph out-degree {} exceeds 2 C(p,2) = {}",
            digraph.delta_plus(),
            2 * pairs
        )));
    }
    let t = itl_transversal(&digraph)?;
    let blocks: Vec<usize> = t.chosen.iter().map(|c| c[0] % s).collect();
    let out: Vec<Vec<usize>> = blocks
        .iter()
        .enumerate()
        .map(|(i, &j)| classes[i][j * p..(j + 1) * p].to_vec())
        .collect();
    if !verify_rainbow_cut(psi, &out) {
        return Err(Error::Invariant("selected blocks share colors with the cut".into()));
    }
    Ok(RainbowCutResult {
        p,
        s,
        classes: out,
        blocks,
        block_delta_plus: digraph.delta_plus(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::pair_index;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Host `K_{2q}` with classes `0..q` and `q..2q`: cross edges get
    /// distinct colors `0..q^2`, interior edges get `interior(a, b)`.
    fn host(q: usize, mut interior: impl FnMut(usize, usize) -> usize) -> (EdgeColoring, Vec<Vec<usize>>) {
        let n = 2 * q;
        let mut raw = vec![0; n * (n - 1) / 2];
        for a in 0..n {
            for b in a + 1..n {
                raw[pair_index(n, a, b)] = if (a < q) != (b < q) {
                    (a % q) * q + b % q
                } else {
                    interior(a, b)
                };
            }
        }
        let classes = vec![(0..q).collect(), (q..n).collect()];
        (EdgeColoring::normalized(n, &raw).unwrap(), classes)
    }

    #[test]
    fn default_parameters_on_k32() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let (psi, classes) = host(16, |_, _| rng.gen_range(0..256 + 10));
        let r = rainbow_cut(&psi, &classes, 2, None).unwrap();
        assert_eq!(r.s, 8);
        assert_eq!(r.classes.len(), 2);
        assert!(r.classes.iter().all(|x| x.len() == 2));
        assert!(r.classes[0].iter().all(|&v| v < 16) && r.classes[1].iter().all(|&v| v >= 16));
        assert!(r.block_delta_plus <= 2);
        assert!(verify_rainbow_cut(&psi, &r.classes));
    }

    #[test]
    fn fresh_interior_color_gives_first_blocks() {
        let (psi, classes) = host(16, |_, _| 10_000);
        let r = rainbow_cut(&psi, &classes, 2, None).unwrap();
        assert_eq!(r.blocks, vec![0, 0]);
        assert_eq!(r.classes, vec![vec![0, 1], vec![16, 17]]);
    }

    #[test]
    fn random_interiors_with_small_s() {
        // s = 5 > 2 * 2 * C(2,2) = 4, so q = 10.
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..200 {
            let (psi, classes) = host(10, |_, _| rng.gen_range(0..100));
            let r = rainbow_cut(&psi, &classes, 2, Some(5)).unwrap();
            assert!(verify_rainbow_cut(&psi, &r.classes));
        }
    }

    #[test]
    fn rejects_repeated_colors_and_bad_sizes() {
        let (psi, classes) = host(16, |_, _| 0);
        let mut raw = psi.colors().to_vec();
        raw[pair_index(32, 0, 16)] = raw[pair_index(32, 1, 17)];
        let bad = EdgeColoring::normalized(32, &raw).unwrap();
        let msg = rainbow_cut(&bad, &classes, 2, None).unwrap_err().to_string();
        assert!(msg.contains("not rainbow"), "{msg}");
        assert!(rainbow_cut(&psi, &classes, 2, Some(4)).is_err());
        assert!(rainbow_cut(&psi, &classes, 3, None).is_err());
    }
}
