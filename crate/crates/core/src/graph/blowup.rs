use super::{bits, Graph};
use crate::error::{Error, Result};

/// A subgraph of the blowup `base[t_1, …, t_k]`.
///
/// Vertex `(class i, slot j)` is numbered `t_0 + … + t_{i-1} + j`. Classes are
/// independent sets and edges only run between classes adjacent in `base`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupGraph {
    base: Graph,
    sizes: Vec<usize>,
    offsets: Vec<usize>,
    class_of: Vec<usize>,
    graph: Graph,
}

/// One vertex per class, `selection[i]` drawn from class `i`.
pub type CanonicalCopy = Vec<usize>;

impl BlowupGraph {
    fn skeleton(base: &Graph, sizes: &[usize]) -> Result<Self> {
        if sizes.len() != base.vertex_count() {
            return Err(Error::SizeMismatch {
                expected: base.vertex_count(),
                actual: sizes.len(),
            });
        }
        if sizes.contains(&0) {
            return Err(Error::ZeroClassSize);
        }
        let mut offsets = Vec::with_capacity(sizes.len() + 1);
        let mut acc = 0;
        for &t in sizes {
            offsets.push(acc);
            acc += t;
        }
        offsets.push(acc);
        let class_of = sizes
            .iter()
            .enumerate()
            .flat_map(|(i, &t)| std::iter::repeat_n(i, t))
            .collect();
        Ok(Self {
            base: base.clone(),
            sizes: sizes.to_vec(),
            offsets,
            class_of,
            graph: Graph::empty(acc),
        })
    }

    /// The full blowup: complete bipartite graphs between adjacent classes.
    pub fn full(base: &Graph, sizes: &[usize]) -> Result<Self> {
        let mut b = Self::skeleton(base, sizes)?;
        for (i, j) in base.edges() {
            for x in b.class_range(i) {
                for y in b.class_range(j) {
                    b.graph.add_edge_unchecked(x, y);
                }
            }
        }
        Ok(b)
    }

    /// `base[n, …, n]`.
    pub fn uniform(base: &Graph, n: usize) -> Result<Self> {
        Self::full(base, &vec![n; base.vertex_count()])
    }

    /// A blowup subgraph with exactly the given edges.
    pub fn with_edges(base: &Graph, sizes: &[usize], edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut b = Self::skeleton(base, sizes)?;
        let n = b.graph.vertex_count();
        for (x, y) in edges {
            if x >= n || y >= n || x == y || !base.has_edge(b.class_of[x], b.class_of[y]) {
                return Err(Error::ForeignEdge(x, y));
            }
            b.graph.add_edge_unchecked(x, y);
        }
        Ok(b)
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn class_count(&self) -> usize {
        self.sizes.len()
    }

    /// The underlying graph on all `Σ t_i` vertices.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex(&self, class: usize, slot: usize) -> usize {
        debug_assert!(slot < self.sizes[class]);
        self.offsets[class] + slot
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn slot_of(&self, v: usize) -> usize {
        v - self.offsets[self.class_of[v]]
    }

    pub fn class_range(&self, class: usize) -> std::ops::Range<usize> {
        self.offsets[class]..self.offsets[class + 1]
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.graph.remove_edge(u, v);
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// Visits every canonical copy of the base whose edges are all present.
    pub fn for_each_canonical_copy(&self, mut visit: impl FnMut(&[usize])) {
        let k = self.class_count();
        let words = self.graph.words();
        let masks: Vec<Vec<u64>> = (0..k)
            .map(|i| bits::range_mask(words, self.offsets[i], self.offsets[i + 1]))
            .collect();
        let back: Vec<Vec<usize>> = (0..k)
            .map(|i| (0..i).filter(|&j| self.base.has_edge(i, j)).collect())
            .collect();
        let mut pick = vec![0usize; k];
        fn rec(b: &BlowupGraph, masks: &[Vec<u64>], back: &[Vec<usize>], pick: &mut Vec<usize>, i: usize, visit: &mut dyn FnMut(&[usize])) {
            if i == pick.len() {
                visit(pick);
                return;
            }
            let mut cand = masks[i].clone();
            for &j in &back[i] {
                bits::and_assign(&mut cand, b.graph.row(pick[j]));
            }
            for x in bits::iter(&cand) {
                pick[i] = x;
                rec(b, masks, back, pick, i + 1, visit);
            }
        }
        if k > 0 {
            rec(self, &masks, &back, &mut pick, 0, &mut visit);
        }
    }

    pub fn canonical_copies(&self) -> Vec<CanonicalCopy> {
        let mut out = Vec::new();
        self.for_each_canonical_copy(|c| out.push(c.to_vec()));
        out
    }
}

/// Number of canonical copies of `pattern` inside `host`, a subgraph of a
/// blowup of `pattern`.
pub fn count_canonical_copies(pattern: &Graph, host: &BlowupGraph) -> Result<u64> {
    if host.base() != pattern {
        return Err(Error::BaseMismatch);
    }
    let mut n = 0u64;
    host.for_each_canonical_copy(|_| n += 1);
    Ok(n)
}
