use num_rational::Rational64;
use serde::Serialize;
use serde_json::{json, Value};

use super::EdgeColouring;
use crate::error::{Error, Result};
use crate::graph::{copies, BlowupGraph, Graph};
use crate::search::detect::{CanonicalDetector, CopyDetector, PairConstraint, MAX_PATTERN_VERTICES};
use crate::search::{self, edge_permutations, Detector, Goal, Problem, SearchConfig, MAX_COLOURS, MAX_SEARCH_VERTICES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    True,
    False,
    Unknown,
}

impl Verdict {
    pub fn as_bool(self) -> Option<bool> {
        match self {
            Verdict::True => Some(true),
            Verdict::False => Some(false),
            Verdict::Unknown => None,
        }
    }
}

/// Result of an exhaustive (or budget-truncated) search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub verdict: Verdict,
    /// Monochromatic copy count of the witness; for minimisation an upper
    /// bound when `exact` is false.
    pub count: Option<u64>,
    /// Colouring certifying a `False` verdict or attaining `count`.
    pub witness: Option<EdgeColouring>,
    pub explored: u64,
    /// False when the node budget ran out first.
    pub exact: bool,
    pub note: Option<String>,
}

impl SearchOutcome {
    pub fn to_json(&self, witness_path: Option<&str>) -> Value {
        let mut v = json!({
            "verdict": self.verdict,
            "count": self.count,
            "exact": self.exact,
            "explored": self.explored,
            "witness_path": witness_path,
        });
        if let Some(note) = &self.note {
            v["note"] = json!(note);
        }
        v
    }
}

fn colour_count(h: &Graph, r: usize) -> Result<u8> {
    if h.edge_count() == 0 {
        return Err(Error::EmptyPattern);
    }
    if r == 0 {
        return Err(Error::ZeroColours);
    }
    if r > MAX_COLOURS {
        return Err(Error::InvalidParameter(format!("at most {MAX_COLOURS} colours are supported, got {r}")));
    }
    Ok(r as u8)
}

fn check_host(n: usize) -> Result<()> {
    if n > MAX_SEARCH_VERTICES {
        return Err(Error::HostTooLarge {
            max: MAX_SEARCH_VERTICES,
            actual: n,
        });
    }
    Ok(())
}

/// Pairs `u < w` with identical neighbourhoods outside `{u, w}`; swapping
/// them is an automorphism.
fn twin_transpositions(g: &Graph, allowed: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for u in 0..n {
        for w in u + 1..n {
            if allowed(u, w) && (0..n).all(|x| x == u || x == w || g.has_edge(u, x) == g.has_edge(w, x)) {
                out.push((u, w));
            }
        }
    }
    out
}

/// Host edges sorted by descending weight, ties lexicographic, plus the
/// search position of each lexicographic edge index.
fn search_order(lex: &[(usize, usize)], weight: &[u64]) -> (Vec<(usize, usize)>, Vec<usize>) {
    let mut idx: Vec<usize> = (0..lex.len()).collect();
    idx.sort_by_key(|&i| (std::cmp::Reverse(weight[i]), lex[i]));
    let mut pos_of = vec![0; lex.len()];
    for (p, &i) in idx.iter().enumerate() {
        pos_of[i] = p;
    }
    (idx.iter().map(|&i| lex[i]).collect(), pos_of)
}

fn lex_index(lex: &[(usize, usize)], u: usize, v: usize) -> usize {
    lex.binary_search(&(u.min(v), u.max(v))).expect("edge of host")
}

/// Everything needed to search colourings of `g` against the copies of `h`.
struct CopySetup {
    lex: Vec<(usize, usize)>,
    order: Vec<(usize, usize)>,
    pos_of: Vec<usize>,
    detector: CopyDetector,
    total: u64,
}

impl CopySetup {
    fn new(g: &Graph, h: &Graph) -> Self {
        let lex = g.edges();
        let h_edges = h.edges();
        let lex_copies: Vec<Vec<usize>> = copies(h, g)
            .iter()
            .map(|phi| h_edges.iter().map(|&(a, b)| lex_index(&lex, phi[a], phi[b])).collect())
            .collect();
        let mut weight = vec![0u64; lex.len()];
        for c in &lex_copies {
            for &i in c {
                weight[i] += 1;
            }
        }
        let (order, pos_of) = search_order(&lex, &weight);
        let total = lex_copies.len() as u64;
        let positioned = lex_copies
            .into_iter()
            .map(|c| c.into_iter().map(|i| pos_of[i]).collect())
            .collect();
        Self {
            detector: CopyDetector::new(lex.len(), positioned),
            lex,
            order,
            pos_of,
            total,
        }
    }

    fn problem<'a, D: Detector>(&self, g: &Graph, r: u8, detector: &'a D, symmetries: bool) -> Problem<'a, D> {
        let perms = if symmetries {
            edge_permutations(&self.order, &twin_transpositions(g, |_, _| true))
        } else {
            Vec::new()
        };
        Problem {
            n: g.vertex_count(),
            r,
            edges: self.order.clone(),
            detector,
            symmetries: perms,
        }
    }
}

fn to_lex(g: &Graph, r: u8, pos_of: &[usize], by_pos: &[u8]) -> EdgeColouring {
    let colours = pos_of.iter().map(|&p| by_pos[p]).collect();
    EdgeColouring::new(g, r as usize, colours).expect("search produces total colourings")
}

/// Decides `g -> h` in `r` colours. On `False` the witness has no
/// monochromatic copy of `h`.
pub fn arrows(g: &Graph, h: &Graph, r: usize, cfg: &SearchConfig) -> Result<SearchOutcome> {
    let r = colour_count(h, r)?;
    check_host(g.vertex_count())?;
    let setup = CopySetup::new(g, h);
    let problem = setup.problem(g, r, &setup.detector, cfg.automorphism_pruning);
    let raw = search::run(&problem, Goal::Decide, 1, cfg);
    Ok(match raw.best {
        Some((count, col)) => SearchOutcome {
            verdict: Verdict::False,
            count: Some(count),
            witness: Some(to_lex(g, r, &setup.pos_of, &col)),
            explored: raw.explored,
            exact: true,
            note: None,
        },
        None => SearchOutcome {
            verdict: if raw.complete { Verdict::True } else { Verdict::Unknown },
            count: None,
            witness: None,
            explored: raw.explored,
            exact: raw.complete,
            note: None,
        },
    })
}

/// `Mult_r(h; g)`: the fewest monochromatic copies of `h` over all
/// `r`-colourings of `g`, with a colouring attaining it.
pub fn multiplicity(g: &Graph, h: &Graph, r: usize, cfg: &SearchConfig) -> Result<SearchOutcome> {
    let r = colour_count(h, r)?;
    check_host(g.vertex_count())?;
    let setup = CopySetup::new(g, h);
    let problem = setup.problem(g, r, &setup.detector, cfg.automorphism_pruning);
    // the greedy colouring is the first incumbent; the search only reports
    // strictly better ones
    let (greedy_count, greedy_col) = search::greedy(&problem);
    let raw = if greedy_count == 0 {
        search::RawOutcome {
            best: None,
            explored: 0,
            complete: true,
        }
    } else {
        search::run(&problem, Goal::Minimize, greedy_count, cfg)
    };
    let (count, col) = raw.best.unwrap_or((greedy_count, greedy_col));
    let verdict = match (count, raw.complete) {
        (0, _) => Verdict::False,
        (_, true) => Verdict::True,
        (_, false) => Verdict::Unknown,
    };
    debug_assert!(count <= setup.total);
    Ok(SearchOutcome {
        verdict,
        count: Some(count),
        witness: Some(to_lex(g, r, &setup.pos_of, &col)),
        explored: raw.explored,
        exact: raw.complete,
        note: None,
    })
}

/// `Mult_r(h; g) / Mult_1(h; g)` as an exact fraction.
pub fn robustness(g: &Graph, h: &Graph, r: usize, cfg: &SearchConfig) -> Result<Rational64> {
    colour_count(h, r)?;
    let total = crate::graph::copy_count(h, g);
    if total == 0 {
        return Err(Error::NoCopies);
    }
    let out = multiplicity(g, h, r, cfg)?;
    if !out.exact {
        return Err(Error::BudgetExhausted);
    }
    Ok(Rational64::new(out.count.expect("multiplicity reports a count") as i64, total as i64))
}

/// Decides whether every `r`-colouring of `g[n]` has a monochromatic
/// canonical `h[t]`.
pub fn canonical_arrows(g: &Graph, h: &Graph, r: usize, t: usize, n: usize, cfg: &SearchConfig) -> Result<SearchOutcome> {
    let r = colour_count(h, r)?;
    if t == 0 || n == 0 {
        return Err(Error::InvalidParameter("t and n must be at least 1".into()));
    }
    if h.vertex_count() > MAX_PATTERN_VERTICES {
        return Err(Error::InvalidParameter(format!(
            "canonical search supports patterns with at most {MAX_PATTERN_VERTICES} vertices"
        )));
    }
    if t > n {
        return Ok(SearchOutcome {
            verdict: Verdict::False,
            count: None,
            witness: None,
            explored: 0,
            exact: true,
            note: Some("no canonical copy exists".into()),
        });
    }
    check_host(g.vertex_count() * n)?;
    let host = BlowupGraph::uniform(g, n)?;
    let hg = host.graph();
    let embeddings = copies(h, g);
    let base_lex = g.edges();
    let mut base_weight = vec![0u64; base_lex.len()];
    for phi in &embeddings {
        for (a, b) in h.edges() {
            base_weight[lex_index(&base_lex, phi[a], phi[b])] += 1;
        }
    }
    let lex = hg.edges();
    let weight: Vec<u64> = lex
        .iter()
        .map(|&(x, y)| base_weight[lex_index(&base_lex, host.class_of(x), host.class_of(y))])
        .collect();
    let (order, pos_of) = search_order(&lex, &weight);
    let detector = CanonicalDetector::new(h, &host, embeddings, t, &order);
    let symmetries = if cfg.automorphism_pruning {
        // slots of one class are interchangeable
        edge_permutations(&order, &twin_transpositions(hg, |u, w| host.class_of(u) == host.class_of(w)))
    } else {
        Vec::new()
    };
    let problem = Problem {
        n: hg.vertex_count(),
        r,
        edges: order,
        detector: &detector,
        symmetries,
    };
    let raw = search::run(&problem, Goal::Decide, 1, cfg);
    Ok(match raw.best {
        Some((_, col)) => SearchOutcome {
            verdict: Verdict::False,
            count: Some(0),
            witness: Some(to_lex(hg, r, &pos_of, &col)),
            explored: raw.explored,
            exact: true,
            note: None,
        },
        None => SearchOutcome {
            verdict: if raw.complete { Verdict::True } else { Verdict::Unknown },
            count: None,
            witness: None,
            explored: raw.explored,
            exact: raw.complete,
            note: None,
        },
    })
}

/// Value of the blowup Ramsey number search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BlowupRamseyNumber {
    /// Least `n` with `g[n]` canonically arrowing `h[t]`.
    Exact { n: usize },
    /// `g` does not arrow `h`, so no `n` works.
    Infinite,
    /// Every `n <= cap` fails.
    AboveCap { cap: usize },
    /// The budget ran out while deciding `n`; all smaller values fail.
    Undecided { n: usize },
}

pub fn blowup_ramsey_number(
    g: &Graph,
    h: &Graph,
    r: usize,
    t: usize,
    n_cap: usize,
    cfg: &SearchConfig,
) -> Result<BlowupRamseyNumber> {
    match arrows(g, h, r, cfg)?.verdict {
        Verdict::False => return Ok(BlowupRamseyNumber::Infinite),
        Verdict::Unknown => return Ok(BlowupRamseyNumber::Undecided { n: 1 }),
        Verdict::True => {}
    }
    for n in t.max(1)..=n_cap {
        match canonical_arrows(g, h, r, t, n, cfg)?.verdict {
            Verdict::True => return Ok(BlowupRamseyNumber::Exact { n }),
            Verdict::Unknown => return Ok(BlowupRamseyNumber::Undecided { n }),
            Verdict::False => {}
        }
    }
    Ok(BlowupRamseyNumber::AboveCap { cap: n_cap })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    /// `e` and `f` always share a colour.
    Positive,
    /// `e` and `f` always differ.
    Negative,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SenderClause {
    /// The sender itself arrows the pattern.
    Arrows,
    /// Some colouring without a monochromatic pattern breaks the colour relation on `e`, `f`.
    Relation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SenderReport {
    pub verdict: Verdict,
    pub violated: Option<SenderClause>,
    pub counterexample: Option<EdgeColouring>,
    pub explored: u64,
}

impl SenderReport {
    pub fn to_json(&self, counterexample_path: Option<&str>) -> Value {
        json!({
            "verdict": self.verdict,
            "violated": self.violated,
            "explored": self.explored,
            "witness_path": counterexample_path,
        })
    }
}

/// Checks that `s` does not arrow `h` and that every colouring of `s`
/// without a monochromatic `h` relates the colours of `e` and `f` as `sign`
/// demands.
pub fn verify_signal_sender(
    s: &Graph,
    e: (usize, usize),
    f: (usize, usize),
    r: usize,
    h: &Graph,
    sign: Sign,
    cfg: &SearchConfig,
) -> Result<SenderReport> {
    for (u, v) in [e, f] {
        if u >= s.vertex_count() || v >= s.vertex_count() || !s.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
    }
    let first = arrows(s, h, r, cfg)?;
    match first.verdict {
        Verdict::True => {
            return Ok(SenderReport {
                verdict: Verdict::False,
                violated: Some(SenderClause::Arrows),
                counterexample: None,
                explored: first.explored,
            })
        }
        Verdict::Unknown => {
            return Ok(SenderReport {
                verdict: Verdict::Unknown,
                violated: None,
                counterexample: None,
                explored: first.explored,
            })
        }
        Verdict::False => {}
    }
    let r = r as u8;
    let setup = CopySetup::new(s, h);
    let constraint = PairConstraint {
        inner: &setup.detector,
        e: setup.pos_of[lex_index(&setup.lex, e.0, e.1)],
        f: setup.pos_of[lex_index(&setup.lex, f.0, f.1)],
        // a counterexample breaks the relation, so colourings keeping it are cut
        forbid_equal: sign == Sign::Positive,
    };
    let problem = setup.problem(s, r, &constraint, false);
    let raw = search::run(&problem, Goal::Decide, 1, cfg);
    let explored = first.explored + raw.explored;
    Ok(match raw.best {
        Some((_, col)) => SenderReport {
            verdict: Verdict::False,
            violated: Some(SenderClause::Relation),
            counterexample: Some(to_lex(s, r, &setup.pos_of, &col)),
            explored,
        },
        None => SenderReport {
            verdict: if raw.complete { Verdict::True } else { Verdict::Unknown },
            violated: None,
            counterexample: None,
            explored,
        },
    })
}
