//! Monochromatic-structure detectors plugged into the search.

use super::{Detector, PartialColouring};
use crate::graph::{BlowupGraph, Graph};

/// Pattern size limit for canonical blowup detection.
pub(crate) const MAX_PATTERN_VERTICES: usize = 16;

/// Explicit family of target copies, each a list of edge positions.
pub(crate) struct CopyDetector {
    through: Vec<Vec<u32>>,
    copies: Vec<Vec<u32>>,
}

impl CopyDetector {
    pub fn new(edge_count: usize, copies: Vec<Vec<usize>>) -> Self {
        let mut through = vec![Vec::new(); edge_count];
        for (i, c) in copies.iter().enumerate() {
            for &p in c {
                through[p].push(i as u32);
            }
        }
        Self {
            through,
            copies: copies.into_iter().map(|c| c.into_iter().map(|p| p as u32).collect()).collect(),
        }
    }
}

impl Detector for CopyDetector {
    #[inline]
    fn completed(&self, pc: &PartialColouring, pos: usize, c: u8, limit: u64) -> u64 {
        let mut n = 0;
        for &ci in &self.through[pos] {
            if self.copies[ci as usize].iter().all(|&p| pc.colour[p as usize] == c) {
                n += 1;
                if n >= limit {
                    break;
                }
            }
        }
        n
    }
}

/// Detects a monochromatic canonical `H[t]` inside a colouring of `G[n]`.
///
/// A canonical `H[t]` is the `t`-blowup of a copy of `H` in `G` with each
/// part inside one class. When edge `xy` gets colour `c`, every copy of `H`
/// using the base edge of `xy` is tried with `x` and `y` forced into their
/// parts; the remaining parts are filled class by class from candidate
/// bitsets that are refined by colour-`c` adjacency to everything chosen in
/// neighbouring parts.
pub(crate) struct CanonicalDetector {
    t: usize,
    k: usize,
    base_n: usize,
    h_nbrs: Vec<Vec<usize>>,
    embeddings: Vec<Vec<usize>>,
    class_mask: Vec<u128>,
    host_class: Vec<usize>,
    /// by ordered base pair `(gx, gy)`: (embedding, a, b) with phi(a) = gx, phi(b) = gy
    by_pair: Vec<Vec<(usize, usize, usize)>>,
    /// by ordered pattern edge `(a, b)`: fill order starting with a, b
    orders: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl CanonicalDetector {
    pub fn new(h: &Graph, host: &BlowupGraph, embeddings: Vec<Vec<usize>>, t: usize, edges: &[(usize, usize)]) -> Self {
        let k = h.vertex_count();
        let base_n = host.class_count();
        let mut by_pair = vec![Vec::new(); base_n * base_n];
        for (e, phi) in embeddings.iter().enumerate() {
            for (a, b) in h.edges() {
                by_pair[phi[a] * base_n + phi[b]].push((e, a, b));
                by_pair[phi[b] * base_n + phi[a]].push((e, b, a));
            }
        }
        let h_nbrs: Vec<Vec<usize>> = (0..k).map(|v| h.neighbours(v).collect()).collect();
        let mut orders = vec![Vec::new(); k * k];
        for (a, b) in h.edges() {
            for (x, y) in [(a, b), (b, a)] {
                let mut order = vec![x, y];
                while order.len() < k {
                    let next = (0..k)
                        .filter(|v| !order.contains(v))
                        .max_by_key(|&v| (h_nbrs[v].iter().filter(|u| order.contains(u)).count(), std::cmp::Reverse(v)))
                        .unwrap();
                    order.push(next);
                }
                orders[x * k + y] = order;
            }
        }
        let class_mask = (0..base_n)
            .map(|i| host.class_range(i).fold(0u128, |m, v| m | 1 << v))
            .collect();
        let host_class = (0..host.graph().vertex_count()).map(|v| host.class_of(v)).collect();
        Self {
            t,
            k,
            base_n,
            h_nbrs,
            embeddings,
            class_mask,
            host_class,
            by_pair,
            orders,
            edges: edges.to_vec(),
        }
    }

    fn extend(&self, pc: &PartialColouring, c: u8, phi: &[usize], order: &[usize], idx: usize, chosen: &mut [u128]) -> bool {
        if idx == self.k {
            return true;
        }
        let w = order[idx];
        let mut cand = self.class_mask[phi[w]] & !chosen[w];
        for &u in &self.h_nbrs[w] {
            let mut s = chosen[u];
            while s != 0 {
                let z = s.trailing_zeros() as usize;
                s &= s - 1;
                cand &= pc.row(c, z);
            }
        }
        let need = self.t - chosen[w].count_ones() as usize;
        let fixed = chosen[w];
        let found = choose(cand, need, 0, &mut |pick| {
            chosen[w] = fixed | pick;
            self.extend(pc, c, phi, order, idx + 1, chosen)
        });
        chosen[w] = fixed;
        found
    }
}

/// Calls `f` on `need`-subsets of `mask` (as bitmasks) until it returns true.
fn choose(mask: u128, need: usize, acc: u128, f: &mut dyn FnMut(u128) -> bool) -> bool {
    if need == 0 {
        return f(acc);
    }
    if (mask.count_ones() as usize) < need {
        return false;
    }
    let low = mask & mask.wrapping_neg();
    choose(mask & !low, need - 1, acc | low, f) || choose(mask & !low, need, acc, f)
}

impl Detector for CanonicalDetector {
    fn completed(&self, pc: &PartialColouring, pos: usize, c: u8, _limit: u64) -> u64 {
        let (x, y) = self.edges[pos];
        let (gx, gy) = (self.host_class[x], self.host_class[y]);
        let mut buf = [0u128; MAX_PATTERN_VERTICES];
        let chosen = &mut buf[..self.k];
        for &(e, a, b) in &self.by_pair[gx * self.base_n + gy] {
            chosen.fill(0);
            chosen[a] = 1 << x;
            chosen[b] = 1 << y;
            let order = &self.orders[a * self.k + b];
            if self.extend(pc, c, &self.embeddings[e], order, 0, chosen) {
                return 1;
            }
        }
        0
    }
}

/// Adds a pseudo-structure on two distinguished edge positions: it fires when
/// both are coloured and their colours are equal (`forbid_equal`) or differ.
pub(crate) struct PairConstraint<'a, D> {
    pub inner: &'a D,
    pub e: usize,
    pub f: usize,
    pub forbid_equal: bool,
}

impl<D: Detector> Detector for PairConstraint<'_, D> {
    fn completed(&self, pc: &PartialColouring, pos: usize, c: u8, limit: u64) -> u64 {
        let mut n = self.inner.completed(pc, pos, c, limit);
        if pos == self.e || pos == self.f {
            let (ce, cf) = (pc.colour[self.e], pc.colour[self.f]);
            if ce != 0 && cf != 0 && (ce == cf) == self.forbid_equal {
                n += 1;
            }
        }
        n
    }
}
