//! Command-line front end.
//!
//! Exit codes: 0 computed, 1 computed with a negative verdict, 2 usage or
//! input error, 3 budget exhausted (partial result printed).

use std::fs;
use std::path::Path;
use std::process::ExitCode;

use blowup_ramsey::bounds::{asymmetric_nonarrow_bound, asymptotic_lower, lll_condition, lll_max_n, upper_constant};
use blowup_ramsey::colouring::{
    arrows, blowup_ramsey_number, canonical_arrows, multiplicity, robustness, verify_signal_sender,
    BlowupRamseyNumber, SearchOutcome, Sign, Verdict,
};
use blowup_ramsey::extract::{extract_monochromatic, ExtractConfig};
use blowup_ramsey::graph::{density_stats, parse_graph};
use blowup_ramsey::random_lab::{arrow_experiment, estimate_robustness, sample_gnp, threshold_scale};
use blowup_ramsey::{BlowupGraph, EdgeColouring, Error, Graph, SearchConfig};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::json;

#[derive(Parser)]
#[command(name = "blowup-ramsey", version, about = "Blowup Ramsey numbers, arrowing and bounds on small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Search node budget.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Args)]
struct HostPattern {
    /// Host graph: a file (edge list or graph6) or a name like k6, c5, p4.
    #[arg(long)]
    graph: String,
    /// Pattern graph, same forms as --graph.
    #[arg(long)]
    pattern: String,
    /// Number of colours.
    #[arg(short = 'r', default_value_t = 2)]
    r: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether every r-colouring of G has a monochromatic H.
    Arrow {
        #[command(flatten)]
        gp: HostPattern,
        /// Write the witness colouring here when G does not arrow H.
        #[arg(long)]
        witness: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Fewest monochromatic copies of H over r-colourings of G.
    Mult {
        #[command(flatten)]
        gp: HostPattern,
        #[arg(long)]
        witness: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Multiplicity divided by the copy count.
    Robustness {
        #[command(flatten)]
        gp: HostPattern,
        /// Seeds the local search used when --budget runs out.
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        common: Common,
    },
    /// Least n with G[n] canonically arrowing H[t], or one check with -n.
    BlowupRamsey {
        #[command(flatten)]
        gp: HostPattern,
        #[arg(short = 't')]
        t: usize,
        /// Decide G[n] -> H[t] for this n only.
        #[arg(short = 'n')]
        n: Option<usize>,
        #[arg(long, default_value_t = 8)]
        n_cap: usize,
        #[arg(long)]
        witness: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Local-lemma certificate at -n, or the largest certified n.
    Lll {
        #[command(flatten)]
        gp: HostPattern,
        #[command(flatten)]
        sizes: Sizes,
        #[arg(short = 'n')]
        n: Option<String>,
        #[arg(long)]
        n_cap: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Upper-bound constants, plus the asymptotic lower bound with -t.
    Bounds {
        #[command(flatten)]
        gp: HostPattern,
        #[arg(short = 't')]
        t: Option<usize>,
        /// With -t: also the asymmetric non-arrowing size for this ln k.
        #[arg(long)]
        ln_k: Option<f64>,
        #[command(flatten)]
        common: Common,
    },
    /// Monochromatic canonical blowup of H inside a colouring of G[n].
    Extract {
        #[command(flatten)]
        gp: HostPattern,
        #[arg(short = 'n')]
        n: usize,
        /// Target size for all classes but the last.
        #[arg(short = 't')]
        t: Option<usize>,
        /// Colouring file of G[n]; without it a random colouring from --seed.
        #[arg(long)]
        colouring: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        common: Common,
    },
    /// Arrowing frequency of G(n, p) over a grid of p.
    Gnp {
        /// Pattern; without it a single sample is printed as an edge list.
        #[arg(long)]
        pattern: Option<String>,
        #[arg(short = 'r', default_value_t = 2)]
        r: usize,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        p_grid: Vec<f64>,
        #[arg(long, default_value_t = 20)]
        samples: u64,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Check a signal sender (S, e, f) for H.
    Sender {
        #[command(flatten)]
        gp: HostPattern,
        #[arg(long, value_parser = parse_edge)]
        edge_e: (usize, usize),
        #[arg(long, value_parser = parse_edge)]
        edge_f: (usize, usize),
        #[arg(long, value_enum, default_value_t = SignArg::Positive)]
        sign: SignArg,
        #[arg(long)]
        witness: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Average degree, maximum density and 2-density.
    Densities {
        #[arg(long)]
        pattern: String,
        /// Also print the threshold scale n^(-1/m2).
        #[arg(short = 'n')]
        n: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Sizes {
    /// Equal part size for every vertex of H.
    #[arg(short = 't', conflicts_with = "t_vec")]
    t: Option<u64>,
    /// Part sizes, one per vertex of H.
    #[arg(long, value_delimiter = ',')]
    t_vec: Option<Vec<u64>>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SignArg {
    Positive,
    Negative,
}

fn parse_edge(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected u,v")?;
    Ok((a.trim().parse().map_err(|_| "bad vertex")?, b.trim().parse().map_err(|_| "bad vertex")?))
}

enum Failure {
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<u8, Failure>;

const OK: u8 = 0;
const NEGATIVE: u8 = 1;
const BUDGET: u8 = 3;

fn load_graph(arg: &str) -> Result<Graph, Failure> {
    if let Some(g) = Graph::named(arg) {
        return Ok(g);
    }
    if arg.starts_with(|c: char| c.is_ascii_digit()) {
        return Err(Failure::Usage(format!("`{arg}`: paths starting with a digit are not accepted")));
    }
    let text = fs::read_to_string(arg).map_err(|e| Failure::Usage(format!("{arg}: {e}")))?;
    let g = parse_graph(&text).map_err(|e| Failure::Usage(format!("{arg}: {e}")))?;
    let label = Path::new(arg).file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    Ok(g.with_label(label))
}

fn config(c: &Common) -> SearchConfig {
    SearchConfig {
        budget: c.budget,
        threads: c.threads.unwrap_or(0),
        automorphism_pruning: true,
    }
}

fn write_witness(path: Option<&str>, col: Option<&EdgeColouring>) -> Result<Option<String>, Failure> {
    match (path, col) {
        (Some(p), Some(c)) => {
            fs::write(p, c.to_text()).map_err(|e| Failure::Usage(format!("{p}: {e}")))?;
            Ok(Some(p.to_owned()))
        }
        _ => Ok(None),
    }
}

fn yes_no(v: Verdict) -> &'static str {
    match v {
        Verdict::True => "yes",
        Verdict::False => "no",
        Verdict::Unknown => "unknown (budget exhausted)",
    }
}

fn verdict_code(v: Verdict) -> u8 {
    match v {
        Verdict::True => OK,
        Verdict::False => NEGATIVE,
        Verdict::Unknown => BUDGET,
    }
}

fn emit_outcome(label: &str, out: &SearchOutcome, path: Option<&str>, json: bool) -> Result<(), Failure> {
    let written = write_witness(path, out.witness.as_ref())?;
    if json {
        println!("{}", out.to_json(written.as_deref()));
    } else {
        println!("{label}: {}", yes_no(out.verdict));
        if let Some(note) = &out.note {
            println!("note: {note}");
        }
        println!("explored: {}", out.explored);
        if let Some(p) = written {
            println!("witness: {p}");
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Arrow { gp, witness, common } => {
            let (g, h) = (load_graph(&gp.graph)?, load_graph(&gp.pattern)?);
            let out = arrows(&g, &h, gp.r, &config(&common))?;
            emit_outcome("ARROWS", &out, witness.as_deref(), common.json)?;
            Ok(verdict_code(out.verdict))
        }
        Command::Mult { gp, witness, common } => {
            let (g, h) = (load_graph(&gp.graph)?, load_graph(&gp.pattern)?);
            let out = multiplicity(&g, &h, gp.r, &config(&common))?;
            let written = write_witness(witness.as_deref(), out.witness.as_ref())?;
            let count = out.count.expect("multiplicity reports a count");
            if common.json {
                println!("{}", out.to_json(written.as_deref()));
            } else {
                let kind = if out.exact { "exact" } else { "upper bound" };
                println!("MULT: {count} ({kind})");
                println!("explored: {}", out.explored);
            }
            Ok(if out.exact { OK } else { BUDGET })
        }
        Command::Robustness { gp, seed, common } => {
            let (g, h) = (load_graph(&gp.graph)?, load_graph(&gp.pattern)?);
            let (value, exact) = match common.budget {
                None => (robustness(&g, &h, gp.r, &config(&common))?, true),
                Some(b) => {
                    let seed = seed.ok_or_else(|| Failure::Usage("--budget needs --seed for the local search".into()))?;
                    let est = estimate_robustness(&g, &h, gp.r, b, seed)?;
                    (est.value, est.exact)
                }
            };
            if common.json {
                println!("{}", json!({"robustness": value.to_string(), "exact": exact, "bound": if exact { "exact" } else { "upper" }}));
            } else {
                println!("ROBUSTNESS: {value}{}", if exact { "" } else { " (upper bound)" });
            }
            Ok(if exact { OK } else { BUDGET })
        }
        Command::BlowupRamsey {
            gp,
            t,
            n,
            n_cap,
            witness,
            common,
        } => {
            let (g, h) = (load_graph(&gp.graph)?, load_graph(&gp.pattern)?);
            let cfg = config(&common);
            if let Some(n) = n {
                let out = canonical_arrows(&g, &h, gp.r, t, n, &cfg)?;
                emit_outcome("CANONICAL ARROWS", &out, witness.as_deref(), common.json)?;
                return Ok(verdict_code(out.verdict));
            }
            let b = blowup_ramsey_number(&g, &h, gp.r, t, n_cap, &cfg)?;
            if common.json {
                println!("{}", serde_json::to_value(&b).expect("plain data"));
            } else {
                match &b {
                    BlowupRamseyNumber::Exact { n } => println!("B = {n}"),
                    BlowupRamseyNumber::Infinite => println!("B = infinite (G does not arrow H)"),
                    BlowupRamseyNumber::AboveCap { cap } => println!("B > {cap}"),
                    BlowupRamseyNumber::Undecided { n } => println!("B >= {n} (budget exhausted at n = {n})"),
                }
            }
            Ok(match b {
                BlowupRamseyNumber::Exact { .. } => OK,
                BlowupRamseyNumber::Infinite | BlowupRamseyNumber::AboveCap { .. } => NEGATIVE,
                BlowupRamseyNumber::Undecided { .. } => BUDGET,
            })
        }
        Command::Lll {
            gp,
            sizes,
            n,
            n_cap,
            common,
        } => {
            let (g, h) = (load_graph(&gp.graph)?, load_graph(&gp.pattern)?);
            let t_vec = match (sizes.t, sizes.t_vec) {
                (Some(t), None) => vec![t; h.vertex_count()],
                (None, Some(v)) => v,
                _ => return Err(Failure::Usage("give -t or --t-vec".into())),
            };
            let big = |s: &str| s.parse::<BigUint>().map_err(|_| Failure::Usage(format!("`{s}` is not a nonnegative integer")));
            if let Some(n) = n {
                let cert = lll_condition(&g, &h, gp.r, &t_vec, &big(&n)?)?;
                if common.json {
                    println!("{}", cert.to_json());
                } else {
                    println!("HOLDS: {}", if cert.holds { "yes" } else { "no" });
                    println!("ln_lhs: {}", cert.ln_lhs);
                }
                return Ok(if cert.holds { OK } else { NEGATIVE });
            }
            let cap = n_cap.as_deref().map(big).transpose()?;
            let out = lll_max_n(&g, &h, gp.r, &t_vec, cap.as_ref())?;
            if common.json {
                println!("{}", serde_json::to_value(&out).expect("plain data"));
            } else {
                println!("MAX N: {}", out.n);
                if let Some(v) = &out.violation {
                    println!("warning: condition fails at {v} below the maximum");
                }
            }
            Ok(if out.n == BigUint::from(0u32) { NEGATIVE } else { OK })
        }
        Command::Bounds { gp, t, ln_k, common } => {
            let (g, h) = (load_graph(&gp.graph)?, load_graph(&gp.pattern)?);
            let rep = match upper_constant(&g, &h, gp.r, &config(&common)) {
                Err(Error::DoesNotArrow) => {
                    println!("{}", if common.json { json!({"error": Error::DoesNotArrow.to_string()}).to_string() } else { Error::DoesNotArrow.to_string() });
                    return Ok(NEGATIVE);
                }
                Err(Error::BudgetExhausted) => {
                    println!("budget exhausted before the robustness was exact");
                    return Ok(BUDGET);
                }
                other => other?,
            };
            let lower = t.map(|t| asymptotic_lower(&h, gp.r, t)).transpose()?;
            let asym = match (t, ln_k) {
                (Some(t), Some(k)) => Some(asymmetric_nonarrow_bound(&h, gp.r, t, k)?),
                (None, Some(_)) => return Err(Failure::Usage("--ln-k needs -t".into())),
                _ => None,
            };
            if common.json {
                let mut v = rep.to_json();
                if let Some(l) = &lower {
                    v["asymptotic_lower"] = serde_json::to_value(l).expect("plain data");
                }
                if let Some(a) = &asym {
                    v["asymmetric"] = a.to_json();
                }
                println!("{v}");
            } else {
                println!("robustness: {}", rep.robustness_used);
                println!("ln c: {}", rep.ln_c);
                println!("ln c0: {}", rep.ln_c0);
                println!("{}", rep.claim);
                if let Some(l) = &lower {
                    println!("asymptotic lower bound: {} (growth base {})", l.value.decimal, l.growth_base);
                }
                if let Some(a) = &asym {
                    println!("{}", a.claim);
                }
            }
            Ok(OK)
        }
        Command::Extract {
            gp,
            n,
            t,
            colouring,
            seed,
            common,
        } => {
            let (g, h) = (load_graph(&gp.graph)?, load_graph(&gp.pattern)?);
            let host = BlowupGraph::uniform(&g, n)?;
            let col = match (colouring, seed) {
                (Some(p), _) => {
                    let text = fs::read_to_string(&p).map_err(|e| Failure::Usage(format!("{p}: {e}")))?;
                    let col = EdgeColouring::parse(&text).map_err(|e| Failure::Usage(format!("{p}: {e}")))?;
                    if col.graph() != host.graph() {
                        return Err(Failure::Usage(format!("{p} does not colour {g}[{n}]")));
                    }
                    col
                }
                (None, Some(s)) => {
                    use rand::SeedableRng;
                    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(s);
                    EdgeColouring::random(host.graph(), gp.r, &mut rng)?
                }
                (None, None) => return Err(Failure::Usage("give --colouring or --seed".into())),
            };
            let cfg = t.map_or_else(ExtractConfig::default, |t| ExtractConfig::sizes(t, t));
            match extract_monochromatic(&col, &host, &h, &cfg) {
                Ok(res) => {
                    if common.json {
                        println!("{}", res.to_json());
                    } else {
                        println!("colour: {}", res.colour.unwrap_or(0));
                        println!("sizes: {:?}", res.sizes);
                        for (i, c) in res.classes.iter().enumerate() {
                            println!("class {i}: {c:?}");
                        }
                        println!("guarantee met: {:?}", res.guarantee_met);
                    }
                    Ok(OK)
                }
                Err(e @ Error::NoMonochromaticCopy { .. }) => {
                    println!("{e}");
                    Ok(NEGATIVE)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Gnp {
            pattern,
            r,
            n,
            p_grid,
            samples,
            seed,
            common,
        } => {
            let Some(pattern) = pattern else {
                let [p] = p_grid[..] else {
                    return Err(Failure::Usage("without --pattern give exactly one p".into()));
                };
                print!("{}", sample_gnp(n, p, seed)?.to_edge_list());
                return Ok(OK);
            };
            let h = load_graph(&pattern)?;
            let exp = arrow_experiment(&h, r, n, &p_grid, samples, seed, &config(&common))?;
            if common.json {
                println!("{}", exp.to_json());
            } else {
                print!("{}", exp.to_csv());
            }
            Ok(if exp.rows.iter().any(|row| row.undecided > 0) { BUDGET } else { OK })
        }
        Command::Sender {
            gp,
            edge_e,
            edge_f,
            sign,
            witness,
            common,
        } => {
            let (s, h) = (load_graph(&gp.graph)?, load_graph(&gp.pattern)?);
            let sign = match sign {
                SignArg::Positive => Sign::Positive,
                SignArg::Negative => Sign::Negative,
            };
            let rep = verify_signal_sender(&s, edge_e, edge_f, gp.r, &h, sign, &config(&common))?;
            let written = write_witness(witness.as_deref(), rep.counterexample.as_ref())?;
            if common.json {
                println!("{}", rep.to_json(written.as_deref()));
            } else {
                println!("SENDER: {}", yes_no(rep.verdict));
                if let Some(c) = rep.violated {
                    println!("violated: {c:?}");
                }
            }
            Ok(verdict_code(rep.verdict))
        }
        Command::Densities { pattern, n, common } => {
            let h = load_graph(&pattern)?;
            let d = density_stats(&h)?;
            let scale = n.map(|n| threshold_scale(&h, n)).transpose()?;
            if common.json {
                let mut v = serde_json::to_value(&d).expect("plain data");
                if let Some(s) = scale {
                    v["threshold_scale"] = json!(s);
                }
                println!("{v}");
            } else {
                println!("d: {}\nm: {}\nm2: {}", d.average_degree, d.max_density, d.two_density);
                if let Some(s) = scale {
                    println!("threshold scale: {s}");
                }
            }
            Ok(OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
