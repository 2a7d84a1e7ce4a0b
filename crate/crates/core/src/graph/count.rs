use std::ops::ControlFlow;

use super::{bits, Graph};

/// Order in which pattern vertices are matched: each next vertex has as many
/// already-placed neighbours as possible, so candidate sets shrink early.
fn match_order(h: &Graph) -> Vec<usize> {
    let k = h.vertex_count();
    let mut placed = vec![false; k];
    let mut order = Vec::with_capacity(k);
    for _ in 0..k {
        let next = (0..k)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let back = h.neighbours(v).filter(|&u| placed[u]).count();
                (back, h.degree(v), std::cmp::Reverse(v))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    order
}

struct Matcher<'a, F> {
    g: &'a Graph,
    order: Vec<usize>,
    // back[i]: positions j < i whose pattern vertices are adjacent to order[i]
    back: Vec<Vec<usize>>,
    all: Vec<u64>,
    phi: Vec<usize>,
    used: Vec<u64>,
    visit: F,
}

impl<F: FnMut(&[usize]) -> ControlFlow<()>> Matcher<'_, F> {
    fn rec(&mut self, i: usize) -> ControlFlow<()> {
        if i == self.order.len() {
            return (self.visit)(&self.phi);
        }
        let mut cand = self.all.clone();
        for &j in &self.back[i] {
            bits::and_assign(&mut cand, self.g.row(self.phi[self.order[j]]));
        }
        for (c, u) in cand.iter_mut().zip(&self.used) {
            *c &= !u;
        }
        let target = self.order[i];
        for x in bits::iter(&cand) {
            self.phi[target] = x;
            bits::set(&mut self.used, x);
            let flow = self.rec(i + 1);
            bits::clear(&mut self.used, x);
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Visits every injective homomorphism `h -> g` as a slice indexed by the
/// vertices of `h`.
pub(crate) fn for_each_embedding<F>(h: &Graph, g: &Graph, visit: F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let k = h.vertex_count();
    if k > g.vertex_count() {
        return;
    }
    let order = match_order(h);
    let back = (0..k)
        .map(|i| (0..i).filter(|&j| h.has_edge(order[i], order[j])).collect())
        .collect();
    let mut m = Matcher {
        g,
        order,
        back,
        all: bits::range_mask(g.words(), 0, g.vertex_count()),
        phi: vec![usize::MAX; k],
        used: vec![0; g.words()],
        visit,
    };
    let _ = m.rec(0);
}

/// All injective homomorphisms from `h` into `g`.
pub fn embeddings(h: &Graph, g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_embedding(h, g, |phi| {
        out.push(phi.to_vec());
        ControlFlow::Continue(())
    });
    out
}

/// Number of injective homomorphisms `inj(h, g)`.
pub fn inj_count(h: &Graph, g: &Graph) -> u64 {
    let mut n = 0u64;
    for_each_embedding(h, g, |_| {
        n += 1;
        ControlFlow::Continue(())
    });
    n
}

/// Automorphisms of `h` as vertex permutations.
pub fn automorphisms(h: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_embedding(h, h, |phi| {
        // injective and edge-preserving on a finite graph with equal edge
        // counts, hence an automorphism
        out.push(phi.to_vec());
        ControlFlow::Continue(())
    });
    out
}

pub fn automorphism_count(h: &Graph) -> u64 {
    inj_count(h, h)
}

/// One representative embedding per unlabelled copy of `h` in `g`: the
/// lexicographically smallest of its orbit under `Aut(h)`.
pub fn copies(h: &Graph, g: &Graph) -> Vec<Vec<usize>> {
    let auts = automorphisms(h);
    let mut out = Vec::new();
    for_each_embedding(h, g, |phi| {
        let minimal = auts.iter().all(|sigma| {
            let composed = sigma.iter().map(|&s| phi[s]);
            phi.iter().copied().le(composed)
        });
        if minimal {
            out.push(phi.to_vec());
        }
        ControlFlow::Continue(())
    });
    out
}

/// Number of subgraphs of `g` isomorphic to `h`.
pub fn copy_count(h: &Graph, g: &Graph) -> u64 {
    inj_count(h, g) / automorphism_count(h)
}
