//! Seeded `G(n, p)` sampling and small Monte Carlo probes.
//!
//! Generator: ChaCha8 seeded with `seed_from_u64(seed)`; sample `i` of an
//! experiment reads stream `i` (`set_stream(i)`). Edge `j` of `K_n`, in
//! lexicographic order, consumes the `j`-th `f64` of the stream and is kept
//! when that draw is below `p`. Samples with the same index therefore share
//! their uniforms across every `p`, which couples the sweep monotonically.

use num_rational::Rational64;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::colouring::{arrows, multiplicity, Verdict};
use crate::error::{Error, Result};
use crate::graph::{copies, copy_count, density_stats, Graph};
use crate::search::SearchConfig;

fn check_p(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("p = {p} outside [0, 1]")));
    }
    Ok(())
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// `G(n, p)` from stream `stream` of `seed`.
pub fn sample_gnp_stream(n: usize, p: f64, seed: u64, stream: u64) -> Result<Graph> {
    check_p(p)?;
    let mut rng = rng_for(seed, stream);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                g.add_edge_unchecked(u, v);
            }
        }
    }
    Ok(g)
}

/// `G(n, p)` from stream 0 of `seed`.
pub fn sample_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    sample_gnp_stream(n, p, seed, 0)
}

/// `n^(-1/m_2(H))`.
pub fn threshold_scale(h: &Graph, n: usize) -> Result<f64> {
    let m2 = density_stats(h)?.two_density;
    Ok((n as f64).powf(-1.0 / m2.to_f64().expect("finite")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RobustnessEstimate {
    /// Exact robustness, or an upper bound on it when `exact` is false.
    #[serde(serialize_with = "crate::ser::ratio64")]
    pub value: Rational64,
    pub exact: bool,
    /// Fewest monochromatic copies seen.
    pub best_count: u64,
    pub copies: u64,
}

const SIDEWAYS_CAP: u32 = 100;

/// Robustness by exhaustive search within `budget` nodes; past the budget,
/// the best of the search incumbent and a restarted local search that
/// spends another `budget` single-edge moves.
pub fn estimate_robustness(g: &Graph, h: &Graph, r: usize, budget: u64, seed: u64) -> Result<RobustnessEstimate> {
    let total = copy_count(h, g);
    if total == 0 {
        return Err(Error::NoCopies);
    }
    let out = multiplicity(g, h, r, &SearchConfig::default().with_budget(budget))?;
    let mut best = out.count.expect("multiplicity reports a count");
    if !out.exact && best > 0 {
        best = best.min(local_search(g, h, r, budget, seed, best));
    }
    Ok(RobustnessEstimate {
        value: Rational64::new(best as i64, total as i64),
        exact: out.exact,
        best_count: best,
        copies: total,
    })
}

/// Restarted descent on the monochromatic copy count: random start, random
/// single-edge recolourings, strict improvements always accepted and up to
/// 100 sideways moves in a row.
fn local_search(g: &Graph, h: &Graph, r: usize, moves: u64, seed: u64, incumbent: u64) -> u64 {
    let lex = g.edges();
    if r < 2 || lex.is_empty() {
        return incumbent;
    }
    let index = |u: usize, v: usize| lex.binary_search(&(u.min(v), u.max(v))).expect("host edge");
    let fam: Vec<Vec<usize>> = copies(h, g)
        .iter()
        .map(|phi| h.edges().iter().map(|&(a, b)| index(phi[a], phi[b])).collect())
        .collect();
    let mut through = vec![Vec::new(); lex.len()];
    for (i, c) in fam.iter().enumerate() {
        for &e in c {
            through[e].push(i);
        }
    }
    let mono = |col: &[u8], c: &[usize]| c.iter().all(|&e| col[e] == col[c[0]]);
    let mut rng = rng_for(seed, u64::MAX);
    let stall_limit = 20 * lex.len() as u64 * r as u64;
    let mut best = incumbent;
    let mut spent = 0u64;
    while spent < moves && best > 0 {
        let mut col: Vec<u8> = (0..lex.len()).map(|_| rng.gen_range(1..=r as u8)).collect();
        let mut score = fam.iter().filter(|c| mono(&col, c)).count() as u64;
        best = best.min(score);
        let (mut sideways, mut stall) = (0u32, 0u64);
        while spent < moves && stall < stall_limit && score > 0 {
            spent += 1;
            let e = rng.gen_range(0..lex.len());
            let old = col[e];
            let new = (old + rng.gen_range(1..r as u8) - 1) % r as u8 + 1;
            let before = through[e].iter().filter(|&&i| mono(&col, &fam[i])).count() as i64;
            col[e] = new;
            let after = through[e].iter().filter(|&&i| mono(&col, &fam[i])).count() as i64;
            let delta = after - before;
            if delta < 0 {
                score = (score as i64 + delta) as u64;
                best = best.min(score);
                sideways = 0;
                stall = 0;
            } else if delta == 0 && sideways < SIDEWAYS_CAP {
                sideways += 1;
                stall += 1;
            } else {
                col[e] = old;
                stall += 1;
            }
        }
    }
    best
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentRow {
    pub p: f64,
    pub arrow_freq: f64,
    pub undecided_frac: f64,
    /// Mean robustness over samples holding a copy of the pattern; an upper
    /// bound when some multiplicity search ran out of budget.
    pub mean_robustness_bound: Option<f64>,
    /// Share of samples decided exactly, `1 - undecided_frac`.
    pub exact_fraction: f64,
    pub samples: u64,
    pub arrows: u64,
    pub undecided: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Experiment {
    pub pattern: String,
    pub r: usize,
    pub n: usize,
    pub samples: u64,
    pub seed: u64,
    pub rows: Vec<ExperimentRow>,
}

impl Experiment {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("p,arrow_freq,undecided_frac,samples,seed\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{},{:.6},{:.6},{},{}\n",
                row.p, row.arrow_freq, row.undecided_frac, row.samples, self.seed
            ));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!(self)
    }
}

/// Fraction of `G(n, p)` samples arrowing `h` for each `p` in `p_grid`.
/// `cfg.budget` bounds each per-sample decision; `cfg.threads` sets how many
/// samples run at once.
pub fn arrow_experiment(
    h: &Graph,
    r: usize,
    n: usize,
    p_grid: &[f64],
    samples: u64,
    seed: u64,
    cfg: &SearchConfig,
) -> Result<Experiment> {
    for &p in p_grid {
        check_p(p)?;
    }
    if samples == 0 {
        return Err(Error::InvalidParameter("samples must be at least 1".into()));
    }
    if h.edge_count() == 0 {
        return Err(Error::EmptyPattern);
    }
    if r == 0 {
        return Err(Error::ZeroColours);
    }
    let per_sample = SearchConfig {
        threads: 1,
        ..cfg.clone()
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.worker_count())
        .build()
        .map_err(|e| Error::InvalidParameter(e.to_string()))?;
    let mut rows = Vec::with_capacity(p_grid.len());
    for &p in p_grid {
        let outcomes: Vec<Result<(Verdict, Option<f64>)>> = pool.install(|| {
            (0..samples)
                .into_par_iter()
                .map(|i| {
                    let g = sample_gnp_stream(n, p, seed, i)?;
                    let verdict = arrows(&g, h, r, &per_sample)?.verdict;
                    let total = copy_count(h, &g);
                    let rob = match (total, verdict) {
                        (0, _) => None,
                        (_, Verdict::False) => Some(0.0),
                        _ => {
                            let m = multiplicity(&g, h, r, &per_sample)?.count.expect("multiplicity reports a count");
                            Some(m as f64 / total as f64)
                        }
                    };
                    Ok((verdict, rob))
                })
                .collect()
        });
        let (mut yes, mut unknown) = (0u64, 0u64);
        let mut robs = Vec::new();
        for o in outcomes {
            let (v, rob) = o?;
            match v {
                Verdict::True => yes += 1,
                Verdict::Unknown => unknown += 1,
                Verdict::False => {}
            }
            robs.extend(rob);
        }
        let s = samples as f64;
        rows.push(ExperimentRow {
            p,
            arrow_freq: yes as f64 / s,
            undecided_frac: unknown as f64 / s,
            mean_robustness_bound: (!robs.is_empty()).then(|| robs.iter().sum::<f64>() / robs.len() as f64),
            exact_fraction: 1.0 - unknown as f64 / s,
            samples,
            arrows: yes,
            undecided: unknown,
        });
    }
    Ok(Experiment {
        pattern: h.to_string(),
        r,
        n,
        samples,
        seed,
        rows,
    })
}
