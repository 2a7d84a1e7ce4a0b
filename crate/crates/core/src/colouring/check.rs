//! Brute-force checks of colouring properties.
//!
//! These share nothing with the search engine or the subgraph matcher and
//! are meant for validating witnesses on small inputs.

use super::EdgeColouring;
use crate::graph::{BlowupGraph, Graph};

/// Visits every injective map `V(h) -> V(host)` preserving edges of `h`.
fn for_each_map(h: &Graph, host: &Graph, edge_ok: &mut dyn FnMut(usize, usize) -> bool, visit: &mut dyn FnMut(&[usize])) {
    fn rec(
        h: &Graph,
        host: &Graph,
        map: &mut Vec<usize>,
        edge_ok: &mut dyn FnMut(usize, usize) -> bool,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        let i = map.len();
        if i == h.vertex_count() {
            visit(map);
            return;
        }
        for x in 0..host.vertex_count() {
            if map.contains(&x) {
                continue;
            }
            let fits = (0..i).all(|j| !h.has_edge(i, j) || (host.has_edge(map[j], x) && edge_ok(map[j], x)));
            if fits {
                map.push(x);
                rec(h, host, map, edge_ok, visit);
                map.pop();
            }
        }
    }
    rec(h, host, &mut Vec::new(), edge_ok, visit);
}

fn map_count(h: &Graph, host: &Graph, edge_ok: &mut dyn FnMut(usize, usize) -> bool) -> u64 {
    let mut n = 0;
    for_each_map(h, host, edge_ok, &mut |_| n += 1);
    n
}

/// Number of monochromatic copies of `h` in `col`, summed over colours.
pub fn monochromatic_copy_count(col: &EdgeColouring, h: &Graph) -> u64 {
    let aut = map_count(h, h, &mut |_, _| true);
    (1..=col.r() as u8)
        .map(|c| map_count(h, col.graph(), &mut |u, v| col.colour(u, v) == Some(c)))
        .sum::<u64>()
        / aut
}

/// Whether `col`, a colouring of the host blowup, contains a monochromatic
/// canonical `h[t]`: a copy of `h` in the base blown up with `t` vertices
/// per part, each part inside its image class.
pub fn has_monochromatic_canonical_blowup(col: &EdgeColouring, host: &BlowupGraph, h: &Graph, t: usize) -> bool {
    let mut maps = Vec::new();
    for_each_map(h, host.base(), &mut |_, _| true, &mut |m| maps.push(m.to_vec()));
    let subsets: Vec<Vec<Vec<usize>>> = (0..host.class_count())
        .map(|i| combinations(&host.class_range(i).collect::<Vec<_>>(), t))
        .collect();
    (1..=col.r() as u8).any(|c| {
        maps.iter().any(|phi| {
            let mut parts = vec![Vec::new(); h.vertex_count()];
            pick_parts(h, phi, &subsets, 0, &mut parts, &mut |a, b| col.colour(a, b) == Some(c))
        })
    })
}

fn pick_parts(
    h: &Graph,
    phi: &[usize],
    subsets: &[Vec<Vec<usize>>],
    i: usize,
    parts: &mut Vec<Vec<usize>>,
    ok: &mut dyn FnMut(usize, usize) -> bool,
) -> bool {
    if i == parts.len() {
        return true;
    }
    for s in &subsets[phi[i]] {
        let fits = (0..i)
            .filter(|&j| h.has_edge(i, j))
            .all(|j| parts[j].iter().all(|&a| s.iter().all(|&b| ok(a, b))));
        if fits {
            parts[i] = s.clone();
            if pick_parts(h, phi, subsets, i + 1, parts, ok) {
                return true;
            }
        }
    }
    false
}

/// All `k`-element subsets of `items`, in lexicographic order.
pub(crate) fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out: Vec<Vec<usize>> = combinations(&items[1..], k - 1)
        .into_iter()
        .map(|mut rest| {
            rest.insert(0, items[0]);
            rest
        })
        .collect();
    out.extend(combinations(&items[1..], k));
    out
}
