//! Backtracking over edge colourings.
//!
//! Edges are coloured in a fixed order. After each assignment a [`Detector`]
//! reports how many target structures just became monochromatic; a branch is
//! cut as soon as the running count reaches the incumbent. Colours are
//! introduced in order (colour `c` only after `c - 1` has appeared), and an
//! optional set of vertex transpositions contributes lex-leader constraints.
//! Both reductions pick the lexicographically least member of each symmetry
//! orbit, so they are compatible with each other.

pub(crate) mod detect;

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;

use rayon::prelude::*;

/// Largest host the engine accepts; per-colour adjacency rows are `u128`.
pub const MAX_SEARCH_VERTICES: usize = 128;

/// Largest colour count the engine accepts.
pub const MAX_COLOURS: usize = 16;

/// Knobs shared by every exhaustive search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Node budget; `None` searches to completion.
    pub budget: Option<u64>,
    /// Worker threads; 0 uses the machine's parallelism.
    pub threads: usize,
    /// Lex-leader pruning over twin-vertex transpositions.
    pub automorphism_pruning: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            budget: None,
            threads: 1,
            automorphism_pruning: true,
        }
    }
}

impl SearchConfig {
    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = Some(budget);
        self
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads;
        self
    }

    pub fn without_automorphisms(mut self) -> Self {
        self.automorphism_pruning = false;
        self
    }

    pub(crate) fn worker_count(&self) -> usize {
        if self.threads == 0 {
            rayon::current_num_threads().max(1)
        } else {
            self.threads
        }
    }
}

/// Colours assigned so far, indexed by search position, plus per-colour
/// adjacency rows for the detectors.
pub(crate) struct PartialColouring {
    pub n: usize,
    pub colour: Vec<u8>,
    adj: Vec<u128>,
    edges: Vec<(usize, usize)>,
}

impl PartialColouring {
    fn new(n: usize, r: u8, edges: &[(usize, usize)]) -> Self {
        Self {
            n,
            colour: vec![0; edges.len()],
            adj: vec![0; n * (r as usize + 1)],
            edges: edges.to_vec(),
        }
    }

    /// Neighbours of `v` along edges of colour `c`.
    #[inline]
    pub fn row(&self, c: u8, v: usize) -> u128 {
        self.adj[c as usize * self.n + v]
    }

    #[inline]
    fn assign(&mut self, pos: usize, c: u8) {
        let (u, v) = self.edges[pos];
        self.colour[pos] = c;
        self.adj[c as usize * self.n + u] |= 1 << v;
        self.adj[c as usize * self.n + v] |= 1 << u;
    }

    #[inline]
    fn unassign(&mut self, pos: usize) {
        let (u, v) = self.edges[pos];
        let c = self.colour[pos] as usize;
        self.colour[pos] = 0;
        self.adj[c * self.n + u] &= !(1 << v);
        self.adj[c * self.n + v] &= !(1 << u);
    }
}

/// Counts target structures completed by the latest assignment.
pub(crate) trait Detector: Sync {
    /// Edge `pos` has just received colour `c` (already visible in `pc`).
    /// Returns the number of newly monochromatic structures; counting may
    /// stop once `limit` is reached.
    fn completed(&self, pc: &PartialColouring, pos: usize, c: u8, limit: u64) -> u64;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Goal {
    /// Stop at the first colouring with count below the initial bound.
    Decide,
    /// Find the minimum count below the initial bound.
    Minimize,
}

pub(crate) struct Problem<'a, D: Detector> {
    pub n: usize,
    pub r: u8,
    /// Host edges in search order.
    pub edges: Vec<(usize, usize)>,
    pub detector: &'a D,
    /// Edge-position permutations induced by symmetry transpositions.
    pub symmetries: Vec<Vec<usize>>,
}

pub(crate) struct RawOutcome {
    /// Best (count, colours by search position) found, if any.
    pub best: Option<(u64, Vec<u8>)>,
    pub explored: u64,
    /// False when the budget ran out before the tree was exhausted.
    pub complete: bool,
}

struct Shared {
    bound: AtomicU64,
    nodes: AtomicU64,
    stop: AtomicBool,
    out_of_budget: AtomicBool,
    best: Mutex<Option<(u64, usize, Vec<u8>)>>,
}

struct Worker<'p, 'a, D: Detector> {
    problem: &'p Problem<'a, D>,
    shared: &'p Shared,
    goal: Goal,
    budget: Option<u64>,
    pc: PartialColouring,
    /// symmetry checks: positions p with perm[p] > p, ascending
    sym_positions: Vec<Vec<usize>>,
    local_nodes: u64,
    unit: usize,
}

const FLUSH: u64 = 1 << 10;

impl<D: Detector> Worker<'_, '_, D> {
    fn flush(&mut self) -> bool {
        let total = self.shared.nodes.fetch_add(self.local_nodes, Ordering::Relaxed) + self.local_nodes;
        self.local_nodes = 0;
        if let Some(b) = self.budget {
            if total >= b {
                self.shared.out_of_budget.store(true, Ordering::Relaxed);
                self.shared.stop.store(true, Ordering::Relaxed);
            }
        }
        !self.shared.stop.load(Ordering::Relaxed)
    }

    fn tick(&mut self) -> bool {
        self.local_nodes += 1;
        if self.local_nodes >= FLUSH || self.budget.is_some_and(|b| b < FLUSH * 4) {
            return self.flush();
        }
        true
    }

    /// Lex-leader test: false when the assignment so far is already
    /// lexicographically larger than its image under some symmetry.
    fn lex_ok(&self, depth: usize) -> bool {
        let col = &self.pc.colour;
        'perm: for (perm, positions) in self.problem.symmetries.iter().zip(&self.sym_positions) {
            for &p in positions {
                let q = perm[p];
                if q > depth {
                    continue 'perm;
                }
                match col[p].cmp(&col[q]) {
                    std::cmp::Ordering::Less => continue 'perm,
                    std::cmp::Ordering::Greater => return false,
                    std::cmp::Ordering::Equal => {}
                }
            }
        }
        true
    }

    fn record(&mut self, count: u64) {
        let mut best = self.shared.best.lock().unwrap();
        let better = match &*best {
            None => true,
            Some((c, unit, _)) => count < *c || (count == *c && self.unit < *unit),
        };
        if better {
            *best = Some((count, self.unit, self.pc.colour.clone()));
        }
        self.shared.bound.fetch_min(count, Ordering::Relaxed);
        if self.goal == Goal::Decide || count == 0 {
            self.shared.stop.store(true, Ordering::Relaxed);
        }
    }

    /// Candidate colours for `depth`, cheapest first.
    fn options(&mut self, depth: usize, count: u64, max_used: u8) -> ([(u64, u8); MAX_COLOURS], usize) {
        let top = self.problem.r.min(max_used + 1);
        let mut opts = [(0u64, 0u8); MAX_COLOURS];
        let limit = self.shared.bound.load(Ordering::Relaxed).saturating_sub(count);
        for c in 1..=top {
            self.pc.assign(depth, c);
            let added = self.problem.detector.completed(&self.pc, depth, c, limit);
            self.pc.unassign(depth);
            opts[c as usize - 1] = (added, c);
        }
        let len = top as usize;
        if self.goal == Goal::Minimize {
            opts[..len].sort();
        }
        (opts, len)
    }

    fn dfs(&mut self, depth: usize, count: u64, max_used: u8) {
        if depth == self.pc.colour.len() {
            self.record(count);
            return;
        }
        let (opts, len) = self.options(depth, count, max_used);
        for &(added, c) in &opts[..len] {
            if !self.tick() {
                return;
            }
            let bound = self.shared.bound.load(Ordering::Relaxed);
            if count + added >= bound {
                if self.goal == Goal::Minimize {
                    // options are sorted by cost
                    break;
                }
                continue;
            }
            self.pc.assign(depth, c);
            if self.lex_ok(depth) {
                self.dfs(depth + 1, count + added, max_used.max(c));
            }
            self.pc.unassign(depth);
            if self.shared.stop.load(Ordering::Relaxed) {
                return;
            }
        }
    }

    /// Collects feasible prefixes of length `depth` as work units.
    fn frontier(&mut self, depth: usize, target: usize, count: u64, max_used: u8, out: &mut Vec<(Vec<u8>, u64, u8)>) {
        if depth == target || depth == self.pc.colour.len() {
            out.push((self.pc.colour[..depth].to_vec(), count, max_used));
            return;
        }
        let (opts, len) = self.options(depth, count, max_used);
        for &(added, c) in &opts[..len] {
            if count + added >= self.shared.bound.load(Ordering::Relaxed) {
                continue;
            }
            self.pc.assign(depth, c);
            if self.lex_ok(depth) {
                self.frontier(depth + 1, target, count + added, max_used.max(c), out);
            }
            self.pc.unassign(depth);
        }
    }
}

/// Runs the search for colourings whose count is below `initial_bound`.
pub(crate) fn run<D: Detector>(problem: &Problem<'_, D>, goal: Goal, initial_bound: u64, cfg: &SearchConfig) -> RawOutcome {
    let m = problem.edges.len();
    let shared = Shared {
        bound: AtomicU64::new(initial_bound),
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
        out_of_budget: AtomicBool::new(false),
        best: Mutex::new(None),
    };
    let sym_positions: Vec<Vec<usize>> = problem
        .symmetries
        .iter()
        .map(|perm| (0..m).filter(|&p| perm[p] > p).collect())
        .collect();
    let make_worker = |unit: usize| Worker {
        problem,
        shared: &shared,
        goal,
        budget: cfg.budget,
        pc: PartialColouring::new(problem.n, problem.r, &problem.edges),
        sym_positions: sym_positions.clone(),
        local_nodes: 0,
        unit,
    };
    let threads = cfg.worker_count();
    if threads <= 1 || m < 12 {
        let mut w = make_worker(0);
        w.dfs(0, 0, 0);
        w.flush();
    } else {
        let mut seed = make_worker(0);
        let mut units = Vec::new();
        // enough prefixes to keep every worker busy
        let depth = (m / 2).min(10 + threads.ilog2() as usize);
        seed.frontier(0, depth, 0, 0, &mut units);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool");
        pool.install(|| {
            units.par_iter().enumerate().for_each(|(i, (prefix, count, max_used))| {
                if shared.stop.load(Ordering::Relaxed) {
                    return;
                }
                let mut w = make_worker(i);
                for (pos, &c) in prefix.iter().enumerate() {
                    w.pc.assign(pos, c);
                }
                w.dfs(prefix.len(), *count, *max_used);
                w.flush();
            });
        });
    }
    let best = shared.best.into_inner().unwrap().map(|(c, _, col)| (c, col));
    let out_of_budget = shared.out_of_budget.load(Ordering::Relaxed);
    let finished_early = goal == Goal::Decide && best.is_some() || best.as_ref().is_some_and(|(c, _)| *c == 0);
    RawOutcome {
        best,
        explored: shared.nodes.load(Ordering::Relaxed),
        complete: !out_of_budget || finished_early,
    }
}

/// Colours positions in order, each with the colour completing the fewest
/// structures (lowest colour on ties). Returns the total and the colours.
pub(crate) fn greedy<D: Detector>(problem: &Problem<'_, D>) -> (u64, Vec<u8>) {
    let mut pc = PartialColouring::new(problem.n, problem.r, &problem.edges);
    let mut total = 0;
    for pos in 0..problem.edges.len() {
        let mut best = (u64::MAX, 1);
        for c in 1..=problem.r {
            pc.assign(pos, c);
            let added = problem.detector.completed(&pc, pos, c, u64::MAX);
            pc.unassign(pos);
            if added < best.0 {
                best = (added, c);
            }
        }
        pc.assign(pos, best.1);
        total += best.0;
    }
    (total, pc.colour)
}

/// Edge-position permutations for the vertex transpositions `(u, w)`.
pub(crate) fn edge_permutations(edges: &[(usize, usize)], transpositions: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let index: std::collections::HashMap<(usize, usize), usize> =
        edges.iter().enumerate().map(|(i, &(a, b))| ((a.min(b), a.max(b)), i)).collect();
    transpositions
        .iter()
        .map(|&(u, w)| {
            let swap = |x: usize| if x == u { w } else if x == w { u } else { x };
            edges
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (swap(a), swap(b));
                    index[&(x.min(y), x.max(y))]
                })
                .collect()
        })
        .collect()
}
