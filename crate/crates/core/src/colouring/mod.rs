//! Edge colourings and the exact decision / optimisation operations over them.

pub mod check;
mod ops;

pub use ops::{
    arrows, blowup_ramsey_number, canonical_arrows, multiplicity, robustness, verify_signal_sender, BlowupRamseyNumber,
    SearchOutcome, SenderClause, SenderReport, Sign, Verdict,
};

use rand::Rng;

use crate::error::{Error, ParseError, Result};
use crate::graph::Graph;

/// An assignment of colours `1..=r` to every edge of a host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColouring {
    graph: Graph,
    r: usize,
    edges: Vec<(usize, usize)>,
    colours: Vec<u8>,
}

impl EdgeColouring {
    /// `colours[i]` colours the `i`-th edge of `graph.edges()`.
    pub fn new(graph: &Graph, r: usize, colours: Vec<u8>) -> Result<Self> {
        if r == 0 {
            return Err(Error::ZeroColours);
        }
        let edges = graph.edges();
        if colours.len() != edges.len() {
            return Err(Error::InvalidParameter(format!(
                "{} colours for {} edges",
                colours.len(),
                edges.len()
            )));
        }
        if let Some(bad) = colours.iter().find(|&&c| c == 0 || c as usize > r) {
            return Err(Error::InvalidParameter(format!("colour {bad} outside 1..={r}")));
        }
        Ok(Self {
            graph: graph.clone(),
            r,
            edges,
            colours,
        })
    }

    pub fn from_fn(graph: &Graph, r: usize, mut f: impl FnMut(usize, usize) -> u8) -> Result<Self> {
        let colours = graph.edges().into_iter().map(|(u, v)| f(u, v)).collect();
        Self::new(graph, r, colours)
    }

    pub fn monochromatic(graph: &Graph, r: usize) -> Result<Self> {
        Self::from_fn(graph, r, |_, _| 1)
    }

    /// Uniformly random colouring drawn from `rng`, edges in lexicographic order.
    pub fn random<R: Rng + ?Sized>(graph: &Graph, r: usize, rng: &mut R) -> Result<Self> {
        if r == 0 {
            return Err(Error::ZeroColours);
        }
        Self::from_fn(graph, r, |_, _| rng.gen_range(1..=r as u8))
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn colours(&self) -> &[u8] {
        &self.colours
    }

    /// Colour of edge `u-v`, or `None` if it is not an edge.
    pub fn colour(&self, u: usize, v: usize) -> Option<u8> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok().map(|i| self.colours[i])
    }

    /// Spanning subgraph formed by the edges of colour `c`.
    pub fn colour_class(&self, c: u8) -> Graph {
        let mut g = Graph::empty(self.graph.vertex_count());
        for (&(u, v), &col) in self.edges.iter().zip(&self.colours) {
            if col == c {
                g.add_edge_unchecked(u, v);
            }
        }
        g
    }

    /// Colouring file: header `n m r`, then `u v c` per edge.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.graph.vertex_count(), self.edges.len(), self.r);
        for (&(u, v), c) in self.edges.iter().zip(&self.colours) {
            out.push_str(&format!("{u} {v} {c}\n"));
        }
        out
    }

    pub fn parse(text: &str) -> std::result::Result<Self, ParseError> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l)).filter(|(_, l)| !l.trim().is_empty());
        let (hl, header) = lines.next().ok_or_else(|| ParseError::new(1, "missing header"))?;
        let nums = |ln: usize, line: &str, want: usize| -> std::result::Result<Vec<usize>, ParseError> {
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != want {
                return Err(ParseError::new(ln, format!("expected {want} integers")));
            }
            toks.iter()
                .map(|t| t.parse().map_err(|_| ParseError::new(ln, format!("`{t}` is not a nonnegative integer"))))
                .collect()
        };
        let h = nums(hl, header, 3)?;
        let (n, m, r) = (h[0], h[1], h[2]);
        if r == 0 || r > 255 {
            return Err(ParseError::new(hl, "colour count must be in 1..=255"));
        }
        let mut g = Graph::empty(n);
        let mut coloured = Vec::with_capacity(m);
        let mut last = hl;
        for (ln, line) in lines {
            last = ln;
            if coloured.len() == m {
                return Err(ParseError::new(ln, format!("more than the declared {m} edges")));
            }
            let t = nums(ln, line, 3)?;
            let (u, v, c) = (t[0], t[1], t[2]);
            if u >= n || v >= n || u == v {
                return Err(ParseError::new(ln, format!("invalid edge {u}-{v}")));
            }
            if g.has_edge(u, v) {
                return Err(ParseError::new(ln, format!("duplicate edge {u}-{v}")));
            }
            if c == 0 || c > r {
                return Err(ParseError::new(ln, format!("colour {c} outside 1..={r}")));
            }
            g.add_edge_unchecked(u, v);
            coloured.push(((u.min(v), u.max(v)), c as u8));
        }
        if coloured.len() != m {
            return Err(ParseError::new(last, format!("declared {m} edges, found {}", coloured.len())));
        }
        coloured.sort();
        let colours = coloured.into_iter().map(|(_, c)| c).collect();
        Ok(Self::new(&g, r, colours).expect("validated above"))
    }
}
