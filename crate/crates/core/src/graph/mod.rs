//! Simple undirected graphs stored as adjacency bitrows, plus blowups and
//! the subgraph counting primitives everything else is built on.

pub(crate) mod bits;
mod blowup;
mod count;
mod density;
mod io;

use std::fmt;

pub use blowup::{count_canonical_copies, BlowupGraph, CanonicalCopy};
pub use count::{automorphisms, automorphism_count, copies, copy_count, embeddings, inj_count};
pub use density::{density_stats, DensityReport};
pub use io::{parse_graph, parse_graph6, parse_edge_list};

use crate::error::{Error, Result};

/// A finite simple graph on vertices `0..n`.
///
/// Every vertex owns a bitrow of `words` 64-bit words; the relation is kept
/// symmetric with an empty diagonal by the mutators.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    label: Option<String>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = bits::words_for(n.max(1));
        Self {
            n,
            words,
            rows: vec![0; words * n],
            label: None,
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge_unchecked(u, v);
            }
        }
        g.with_label(format!("K{n}"))
    }

    /// Cycle on `n >= 3` vertices `0-1-…-(n-1)-0`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Self::empty(n);
        for u in 0..n {
            g.add_edge_unchecked(u, (u + 1) % n);
        }
        g.with_label(format!("C{n}"))
    }

    /// Path on `n` vertices (so `n - 1` edges).
    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 1..n {
            g.add_edge_unchecked(u - 1, u);
        }
        g.with_label(format!("P{n}"))
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Self::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge_unchecked(u, v);
            }
        }
        g.with_label(format!("K{a},{b}"))
    }

    /// Built-in graphs by name: `kN`, `cN`, `pN` (case-insensitive).
    pub fn named(name: &str) -> Option<Self> {
        let lower = name.to_ascii_lowercase();
        let (kind, rest) = lower.split_at(lower.char_indices().nth(1)?.0);
        let n: usize = rest.parse().ok()?;
        match kind {
            "k" if (1..=64).contains(&n) => Some(Self::complete(n)),
            "c" if (3..=64).contains(&n) => Some(Self::cycle(n)),
            "p" if (1..=64).contains(&n) => Some(Self::path(n)),
            _ => None,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::InvalidParameter(format!("bad edge {u}-{v} for {n} vertices")));
            }
            g.add_edge_unchecked(u, v);
        }
        Ok(g)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        let w = self.words;
        bits::set(&mut self.rows[u * w..(u + 1) * w], v);
        bits::set(&mut self.rows[v * w..(v + 1) * w], u);
    }

    /// Adds `u-v`; returns false when the edge was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        if u >= self.n || v >= self.n || u == v {
            return Err(Error::InvalidParameter(format!("bad edge {u}-{v} for {} vertices", self.n)));
        }
        let fresh = !self.has_edge(u, v);
        self.add_edge_unchecked(u, v);
        Ok(fresh)
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        let w = self.words;
        bits::clear(&mut self.rows[u * w..(u + 1) * w], v);
        bits::clear(&mut self.rows[v * w..(v + 1) * w], u);
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bits::get(self.row(u), v)
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub(crate) fn words(&self) -> usize {
        self.words
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits::iter(self.row(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        bits::count(self.row(v))
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.neighbours(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// The graph with vertex `v` removed; later vertices shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Subgraph induced by `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.add_edge_unchecked(i, j);
                }
            }
        }
        g
    }

    /// Serializes in the edge-list format: header `n m`, then `u v` per edge.
    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n, edges.len());
        for (u, v) in edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn to_graph6(&self) -> String {
        io::to_graph6(self)
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rows == other.rows
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("label", &self.label)
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.label {
            Some(l) => write!(f, "{l}"),
            None => write!(f, "graph({} vertices, {} edges)", self.n, self.edge_count()),
        }
    }
}
