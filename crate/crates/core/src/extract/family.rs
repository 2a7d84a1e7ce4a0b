use std::collections::HashMap;

use num_rational::Rational64;
use serde::Serialize;

use crate::graph::BlowupGraph;

/// A set of canonical copies in a blowup; `copies[i][c]` is the vertex the
/// `i`-th copy takes in class `c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CopyFamily {
    pub classes: usize,
    pub copies: Vec<Vec<usize>>,
}

impl CopyFamily {
    /// Every canonical copy of the base inside `host`.
    pub fn all(host: &BlowupGraph) -> Self {
        Self {
            classes: host.class_count(),
            copies: host.canonical_copies(),
        }
    }

    pub fn len(&self) -> usize {
        self.copies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.copies.is_empty()
    }

    /// Distinct copies with class `v` dropped.
    pub fn projections(&self, v: usize) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self.copies.iter().map(|c| without(c, v)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

fn without(copy: &[usize], v: usize) -> Vec<usize> {
    let mut p = copy.to_vec();
    p.remove(v);
    p
}

/// Repeatedly removes every extension of a projection (the copy with class
/// `v` dropped) that has fewer than `theta` extensions left.
///
/// Removing the extensions of one projection leaves the extension counts of
/// all other projections unchanged, so a single pass reaches the fixed point.
pub fn prune_family(m: &CopyFamily, v: usize, theta: Rational64) -> CopyFamily {
    let mut count: HashMap<Vec<usize>, i64> = HashMap::new();
    for c in &m.copies {
        *count.entry(without(c, v)).or_default() += 1;
    }
    let keep = |c: &Vec<usize>| Rational64::from_integer(count[&without(c, v)]) >= theta;
    CopyFamily {
        classes: m.classes,
        copies: m.copies.iter().filter(|c| keep(c)).cloned().collect(),
    }
}
