use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A bipartite graph with parts `A = 0..a` and `B = 0..b`, stored as the
/// sorted `A`-neighbourhood of each `B` vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartite {
    a: usize,
    b_nbrs: Vec<Vec<usize>>,
}

impl Bipartite {
    /// Edges are `(a_index, b_index)` pairs; duplicates are ignored.
    pub fn new(a: usize, b: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut b_nbrs = vec![Vec::new(); b];
        for (x, y) in edges {
            if x >= a || y >= b {
                return Err(Error::InvalidParameter(format!("bipartite edge ({x}, {y}) outside {a} x {b}")));
            }
            b_nbrs[y].push(x);
        }
        for l in &mut b_nbrs {
            l.sort_unstable();
            l.dedup();
        }
        Ok(Self { a, b_nbrs })
    }

    /// The bipartite subgraph of `g` between `part_a` and `part_b`, indexed
    /// by position in each part.
    pub fn from_graph(g: &Graph, part_a: &[usize], part_b: &[usize]) -> Result<Self> {
        let mut edges = Vec::new();
        for (i, &x) in part_a.iter().enumerate() {
            for (j, &y) in part_b.iter().enumerate() {
                if g.has_edge(x, y) {
                    edges.push((i, j));
                }
            }
        }
        Self::new(part_a.len(), part_b.len(), edges)
    }

    pub fn a_len(&self) -> usize {
        self.a
    }

    pub fn b_len(&self) -> usize {
        self.b_nbrs.len()
    }

    pub fn edge_count(&self) -> usize {
        self.b_nbrs.iter().map(Vec::len).sum()
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.b_nbrs[y].binary_search(&x).is_ok()
    }

    /// `B` vertices adjacent to every member of `xs`.
    pub fn common_neighbours(&self, xs: &[usize]) -> Vec<usize> {
        (0..self.b_len())
            .filter(|&y| xs.iter().all(|&x| self.b_nbrs[y].binary_search(&x).is_ok()))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Biclique {
    /// `s` vertices of `A`, ascending.
    pub a0: Vec<usize>,
    /// Every common neighbour of `a0` in `B`, ascending.
    pub b0: Vec<usize>,
    /// False when the greedy fallback was used.
    pub exact: bool,
}

/// Default cap on tally entries before falling back to greedy.
pub const DEFAULT_TALLY_BUDGET: u64 = 10_000_000;

fn binomial_capped(n: usize, k: usize, cap: u64) -> u64 {
    if n < k {
        return 0;
    }
    let mut c: u64 = 1;
    for i in 0..k as u64 {
        c = c.saturating_mul(n as u64 - i) / (i + 1);
        if c > cap {
            return cap.saturating_add(1);
        }
    }
    c
}

/// `s`-subset `A0` of `A` with the most common neighbours, and those
/// neighbours. Exact by tallying, for every `b`, the `s`-subsets of its
/// neighbourhood; ties go to the lexicographically smallest subset.
pub fn extract_biclique(f: &Bipartite, s: usize, tally_budget: u64) -> Result<Biclique> {
    if s == 0 || s > f.a_len() {
        return Err(Error::InvalidParameter(format!("s = {s} must lie in 1..={}", f.a_len())));
    }
    let entries = f
        .b_nbrs
        .iter()
        .fold(0u64, |acc, l| acc.saturating_add(binomial_capped(l.len(), s, tally_budget)));
    if entries > tally_budget {
        return Ok(greedy(f, s));
    }
    let mut tally: HashMap<Vec<usize>, u64> = HashMap::new();
    let mut pick = Vec::with_capacity(s);
    for l in &f.b_nbrs {
        subsets(l, s, 0, &mut pick, &mut |x| *tally.entry(x.to_vec()).or_default() += 1);
    }
    let a0 = tally
        .into_iter()
        .max_by(|(x, cx), (y, cy)| cx.cmp(cy).then_with(|| y.cmp(x)))
        .map(|(x, _)| x)
        // no b has s neighbours, so every subset has d = 0
        .unwrap_or_else(|| (0..s).collect());
    Ok(Biclique {
        b0: f.common_neighbours(&a0),
        a0,
        exact: true,
    })
}

fn subsets(items: &[usize], s: usize, from: usize, pick: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if pick.len() == s {
        visit(pick);
        return;
    }
    let need = s - pick.len();
    if items.len() < from + need {
        return;
    }
    for i in from..=items.len() - need {
        pick.push(items[i]);
        subsets(items, s, i + 1, pick, visit);
        pick.pop();
    }
}

/// Adds, one at a time, the `A` vertex keeping the most `B` vertices alive.
fn greedy(f: &Bipartite, s: usize) -> Biclique {
    let mut alive: Vec<usize> = (0..f.b_len()).collect();
    let mut chosen: Vec<usize> = Vec::with_capacity(s);
    for _ in 0..s {
        let best = (0..f.a_len())
            .filter(|x| !chosen.contains(x))
            .max_by_key(|&x| (alive.iter().filter(|&&y| f.has_edge(x, y)).count(), std::cmp::Reverse(x)))
            .expect("s <= |A|");
        chosen.push(best);
        alive.retain(|&y| f.has_edge(best, y));
    }
    chosen.sort_unstable();
    Biclique {
        a0: chosen,
        b0: alive,
        exact: false,
    }
}
