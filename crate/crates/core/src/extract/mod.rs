//! Constructive extraction of (monochromatic) canonical blowups from dense
//! families of canonical copies.
//!
//! The recursion drops the last class (the pivot), prunes the family so each
//! surviving projection has at least `(ρ/2)n` extensions, covers a blowup of
//! the remaining pattern recursively, and finishes with a biclique between
//! disjoint covered copies and the pivot class. Each level hands up the
//! disjoint member copies it built its result from, which the next level
//! uses as its bipartite side.

mod biclique;
pub mod check;
mod family;

pub use biclique::{extract_biclique, Biclique, Bipartite, DEFAULT_TALLY_BUDGET};
pub use family::{prune_family, CopyFamily};

use std::collections::HashSet;

use num_rational::Rational64;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::colouring::EdgeColouring;
use crate::error::{Error, Result};
use crate::graph::{copies, count_canonical_copies, BlowupGraph, Graph};

/// Sizes the extraction theorem promises for a family of density `rho` in
/// `H[n]` with `k` classes.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExtractionParams {
    #[serde(serialize_with = "crate::ser::ratio64")]
    pub rho: Rational64,
    pub k: usize,
    pub ln_n: f64,
    /// Size of the biclique side drawn from the copies; equals `t`.
    pub s: u64,
    /// `⌊ρ^k 4^(-k²+k) ln n⌋`.
    pub t: u64,
    /// `ln t' = (1 - ρ^(k-1)) ln n`.
    pub ln_t_prime: f64,
    /// `⌈n^(1 - ρ^(k-1))⌉` when it fits in 64 bits.
    pub t_prime: Option<u64>,
    /// True when `t = 0`: the statement says nothing at this scale.
    pub vacuous: bool,
}

/// [`guaranteed_sizes`] with `n` given by its natural logarithm.
pub fn guaranteed_sizes_ln(rho: Rational64, k: usize, ln_n: f64) -> Result<ExtractionParams> {
    if rho <= Rational64::zero() || rho > Rational64::one() {
        return Err(Error::InvalidParameter(format!("rho = {rho} must lie in (0, 1]")));
    }
    if k < 2 {
        return Err(Error::InvalidParameter("at least two classes are needed".into()));
    }
    if ln_n.is_nan() || ln_n < 0.0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let rf = rho.to_f64().expect("finite");
    let ki = k as i32;
    let t = (rf.powi(ki) * 4f64.powi(-ki * ki + ki) * ln_n).floor() as u64;
    let ln_t_prime = (1.0 - rf.powi(ki - 1)) * ln_n;
    let t_prime = (ln_t_prime < 43.0).then(|| {
        let x = ln_t_prime.exp();
        // absorb rounding when the exponent is an exact integer power
        let r = x.round();
        if (x - r).abs() < 1e-9 * r.max(1.0) {
            r as u64
        } else {
            x.ceil() as u64
        }
    });
    Ok(ExtractionParams {
        rho,
        k,
        ln_n,
        s: t,
        t,
        ln_t_prime,
        t_prime,
        vacuous: t == 0,
    })
}

pub fn guaranteed_sizes(rho: Rational64, k: usize, n: u64) -> Result<ExtractionParams> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    guaranteed_sizes_ln(rho, k, (n as f64).ln())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GuaranteeMet {
    Yes,
    No,
    Vacuous,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    /// Maximise the smallest class, then the pivot class.
    Auto,
    /// Aim for `t` in every class but the last and `t_prime` in the last.
    Sizes { t: usize, t_prime: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtractConfig {
    pub target: Target,
    /// Tally cap for each biclique step; beyond it the greedy fallback runs.
    pub tally_budget: u64,
}

impl Default for ExtractConfig {
    fn default() -> Self {
        Self {
            target: Target::Auto,
            tally_budget: DEFAULT_TALLY_BUDGET,
        }
    }
}

impl ExtractConfig {
    pub fn sizes(t: usize, t_prime: usize) -> Self {
        Self {
            target: Target::Sizes { t, t_prime },
            ..Self::default()
        }
    }
}

/// A blowup `H[sizes]` found inside a host; `classes[i]` holds the host
/// vertices standing for vertex `i` of `H`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExtractionResult {
    pub classes: Vec<Vec<usize>>,
    pub sizes: Vec<usize>,
    pub colour: Option<u8>,
    /// For monochromatic extraction: the copy of `H` in the base whose blowup was used.
    pub base_copy: Option<Vec<usize>>,
    /// Family covering the result (the top-level pruned family).
    pub covered_by: Option<CopyFamily>,
    /// `min(sizes)` pairwise disjoint members of the cover inside the result.
    pub disjoint: Vec<Vec<usize>>,
    pub params: ExtractionParams,
    /// Density of the family after the top-level pruning.
    #[serde(serialize_with = "crate::ser::ratio64")]
    pub rho_after_pruning: Rational64,
    pub guarantee_met: GuaranteeMet,
    pub target_met: Option<bool>,
    /// False if any biclique step used the greedy fallback.
    pub exact: bool,
}

impl ExtractionResult {
    pub fn to_json(&self) -> Value {
        json!({
            "sizes": self.sizes,
            "classes": self.classes,
            "colour": self.colour,
            "guarantee_met": self.guarantee_met,
            "target_met": self.target_met,
            "base_copy": self.base_copy,
            "exact": self.exact,
            "rho": self.params.rho.to_string(),
            "guarantee": {"t": self.params.t, "ln_t_prime": self.params.ln_t_prime, "vacuous": self.params.vacuous},
        })
    }
}

struct Level {
    sets: Vec<Vec<usize>>,
    disjoint: Vec<Vec<usize>>,
    exact: bool,
}

struct Recursion<'a> {
    classes: &'a [Vec<usize>],
    tally_budget: u64,
}

impl Recursion<'_> {
    /// Family density `|family| / n^j` with `n` the largest class.
    fn theta(&self, family_len: usize, j: usize) -> Rational64 {
        let n = self.classes[..j].iter().map(Vec::len).max().unwrap_or(1) as i64;
        Rational64::new(family_len as i64, 2 * n.pow(j as u32 - 1))
    }

    /// Covers a blowup of the first `j` classes with `s` vertices in all but
    /// the last; returns it with its disjoint members and the family used.
    fn cover(&self, family: &CopyFamily, s: usize) -> Option<(Level, CopyFamily)> {
        let j = family.classes;
        if family.is_empty() {
            return None;
        }
        if j == 2 {
            let (a, b) = (&self.classes[0], &self.classes[1]);
            let pos = |list: &[usize], x: usize| list.binary_search(&x).expect("class member");
            let f = Bipartite::new(a.len(), b.len(), family.copies.iter().map(|c| (pos(a, c[0]), pos(b, c[1])))).ok()?;
            let bc = extract_biclique(&f, s.min(a.len()), self.tally_budget).ok()?;
            if bc.b0.is_empty() {
                return None;
            }
            let sa: Vec<usize> = bc.a0.iter().map(|&i| a[i]).collect();
            let sb: Vec<usize> = bc.b0.iter().map(|&i| b[i]).collect();
            let disjoint = sa.iter().zip(&sb).map(|(&x, &y)| vec![x, y]).collect();
            let level = Level {
                sets: vec![sa, sb],
                disjoint,
                exact: bc.exact,
            };
            return Some((level, family.clone()));
        }
        let pivot = j - 1;
        let pruned = prune_family(family, pivot, self.theta(family.len(), j));
        let projected = CopyFamily {
            classes: j - 1,
            copies: pruned.projections(pivot),
        };
        let (sub, _) = self.cover(&projected, s)?;
        let members: HashSet<&Vec<usize>> = pruned.copies.iter().collect();
        let b = &self.classes[pivot];
        let mut edges = Vec::new();
        let mut probe = Vec::with_capacity(j);
        for (ai, copy) in sub.disjoint.iter().enumerate() {
            for (bi, &u) in b.iter().enumerate() {
                probe.clear();
                probe.extend_from_slice(copy);
                probe.push(u);
                if members.contains(&probe) {
                    edges.push((ai, bi));
                }
            }
        }
        let f = Bipartite::new(sub.disjoint.len(), b.len(), edges).ok()?;
        let bc = extract_biclique(&f, s.min(f.a_len()), self.tally_budget).ok()?;
        if bc.b0.is_empty() {
            return None;
        }
        let chosen: Vec<&Vec<usize>> = bc.a0.iter().map(|&i| &sub.disjoint[i]).collect();
        let mut sets: Vec<Vec<usize>> = (0..pivot)
            .map(|c| {
                let mut v: Vec<usize> = chosen.iter().map(|copy| copy[c]).collect();
                v.sort_unstable();
                v
            })
            .collect();
        let sb: Vec<usize> = bc.b0.iter().map(|&i| b[i]).collect();
        let disjoint = chosen
            .iter()
            .zip(&sb)
            .map(|(copy, &u)| {
                let mut m = (*copy).clone();
                m.push(u);
                m
            })
            .collect();
        sets.push(sb);
        let level = Level {
            sets,
            disjoint,
            exact: sub.exact && bc.exact,
        };
        Some((level, pruned))
    }
}

/// Extracts a blowup of `sub.base()` covered by the canonical copies of `sub`.
/// The last base vertex is the pivot and receives the large class.
pub fn extract_canonical_blowup(sub: &BlowupGraph, cfg: &ExtractConfig) -> Result<ExtractionResult> {
    let k = sub.class_count();
    if k < 2 {
        return Err(Error::InvalidParameter("the base needs at least two vertices".into()));
    }
    let family = CopyFamily::all(sub);
    if family.is_empty() {
        return Err(Error::NoCopies);
    }
    let classes: Vec<Vec<usize>> = (0..k).map(|c| sub.class_range(c).collect()).collect();
    let n = sub.sizes().iter().copied().max().expect("k >= 2");
    let n_pow = (n as i64).checked_pow(k as u32).ok_or_else(|| Error::InvalidParameter("blowup too large".into()))?;
    let rho = Rational64::new(family.len() as i64, n_pow);
    let params = guaranteed_sizes(rho, k, n as u64)?;
    let rec = Recursion {
        classes: &classes,
        tally_budget: cfg.tally_budget,
    };
    let small_max = sub.sizes()[..k - 1].iter().copied().min().expect("k >= 2");
    let score = |l: &Level| {
        let big = l.sets[k - 1].len();
        (l.sets[0].len().min(big), big)
    };
    let mut best: Option<(Level, CopyFamily)> = None;
    match cfg.target {
        Target::Auto => {
            for s in 1..=small_max {
                let Some(found) = rec.cover(&family, s) else { break };
                let big = found.0.sets[k - 1].len();
                if best.as_ref().is_none_or(|b| score(&found.0) > score(&b.0)) {
                    best = Some(found);
                }
                if big < s {
                    break;
                }
            }
        }
        Target::Sizes { t, .. } => {
            let mut s = t.clamp(1, small_max);
            loop {
                if let Some(found) = rec.cover(&family, s) {
                    best = Some(found);
                    break;
                }
                if s == 1 {
                    break;
                }
                s -= 1;
            }
        }
    }
    // any single copy is a covered H[1, ..., 1]
    let (level, cover) = best.unwrap_or_else(|| {
        let c = family.copies[0].clone();
        let level = Level {
            sets: c.iter().map(|&x| vec![x]).collect(),
            disjoint: vec![c],
            exact: true,
        };
        (level, family.clone())
    });
    let sizes: Vec<usize> = level.sets.iter().map(Vec::len).collect();
    let need = sizes.iter().copied().min().unwrap_or(0);
    let mut disjoint = level.disjoint;
    disjoint.truncate(need);
    let guarantee_met = if params.vacuous {
        GuaranteeMet::Vacuous
    } else if sizes[..k - 1].iter().all(|&x| x as u64 >= params.t)
        && params.t_prime.is_some_and(|tp| sizes[k - 1] as u64 >= tp)
    {
        GuaranteeMet::Yes
    } else {
        GuaranteeMet::No
    };
    let target_met = match cfg.target {
        Target::Auto => None,
        Target::Sizes { t, t_prime } => Some(sizes[..k - 1].iter().all(|&x| x >= t) && sizes[k - 1] >= t_prime),
    };
    Ok(ExtractionResult {
        classes: level.sets,
        sizes,
        colour: None,
        base_copy: None,
        rho_after_pruning: Rational64::new(cover.len() as i64, n_pow),
        covered_by: Some(cover),
        disjoint,
        params,
        guarantee_met,
        target_met,
        exact: level.exact,
    })
}

/// Finds the colour and copy of `h` in the base with the most monochromatic
/// canonical copies and extracts a monochromatic blowup of `h` there.
pub fn extract_monochromatic(col: &EdgeColouring, host: &BlowupGraph, h: &Graph, cfg: &ExtractConfig) -> Result<ExtractionResult> {
    if col.graph() != host.graph() {
        return Err(Error::InvalidParameter("colouring is not of the host blowup".into()));
    }
    let g = host.base();
    let phis = copies(h, g);
    if phis.is_empty() {
        return Err(Error::NoCopies);
    }
    let k = h.vertex_count();
    let restrict = |phi: &[usize], c: u8| -> Result<(BlowupGraph, Vec<usize>)> {
        let sizes: Vec<usize> = phi.iter().map(|&x| host.sizes()[x]).collect();
        let to_host: Vec<usize> = phi.iter().flat_map(|&x| host.class_range(x)).collect();
        let mut offset = vec![0; k];
        for a in 1..k {
            offset[a] = offset[a - 1] + sizes[a - 1];
        }
        let mut edges = Vec::new();
        for (a, b) in h.edges() {
            for (i, x) in host.class_range(phi[a]).enumerate() {
                for (j, y) in host.class_range(phi[b]).enumerate() {
                    if col.colour(x, y) == Some(c) {
                        edges.push((offset[a] + i, offset[b] + j));
                    }
                }
            }
        }
        Ok((BlowupGraph::with_edges(h, &sizes, edges)?, to_host))
    };
    let mut best: Option<(u64, usize, u8)> = None;
    for (pi, phi) in phis.iter().enumerate() {
        for c in 1..=col.r() as u8 {
            let (sub, _) = restrict(phi, c)?;
            let count = count_canonical_copies(h, &sub)?;
            if best.is_none_or(|(bc, _, _)| count > bc) {
                best = Some((count, pi, c));
            }
        }
    }
    let (count, pi, c) = best.expect("at least one copy and colour");
    if count == 0 {
        return Err(Error::NoMonochromaticCopy { max_found: 0 });
    }
    let (sub, to_host) = restrict(&phis[pi], c)?;
    let mut res = extract_canonical_blowup(&sub, cfg)?;
    let map = |v: &mut Vec<usize>| v.iter_mut().for_each(|x| *x = to_host[*x]);
    res.classes.iter_mut().for_each(map);
    res.disjoint.iter_mut().for_each(map);
    if let Some(cover) = res.covered_by.as_mut() {
        cover.copies.iter_mut().for_each(map);
    }
    res.colour = Some(c);
    res.base_copy = Some(phis[pi].clone());
    check::check_extraction(host.graph(), h, &res, Some(col)).map_err(|e| Error::InvalidParameter(format!("extraction failed validation: {e}")))?;
    Ok(res)
}
