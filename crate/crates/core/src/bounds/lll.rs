//! The local-lemma condition
//!
//! `e · inj(H,G) · e(H~) · r^(1 - e(H~)) · (Δ / n²) · Π_w C(n, t_w) <= 1`
//!
//! certifying that `G[n]` does not canonically `r`-arrow `H~ = H[t_1, …, t_k]`,
//! where `Δ = max t_i t_j` over edges `ij` of `H`.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use serde_json::{json, Value};
use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};
use crate::graph::{inj_count, Graph};

/// Below this `|ln LHS|` the log-space verdict is re-derived exactly.
pub const EXACTNESS_MARGIN: f64 = 0.01;

/// Leading digits of `e`, truncated: `D / 10^30 < e < (D + 1) / 10^30`.
const E_DIGITS: &str = "2718281828459045235360287471352";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Exactness {
    Log,
    Rational,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LllCertificate {
    pub t_vec: Vec<u64>,
    #[serde(serialize_with = "number_or_string")]
    pub n: BigUint,
    /// `Δ = max t_i t_j` over edges of `H`.
    pub delta: u64,
    /// `e(H~) = Σ t_i t_j` over edges of `H`.
    pub e_tilde: u64,
    pub inj: u64,
    pub ln_lhs: f64,
    /// `ln p` with `p = r^(1 - e(H~))`.
    pub ln_p: f64,
    /// `ln d` for the dependency bound `d = inj e(H~) Δ / n² Π C(n, t_w)`.
    pub ln_d: f64,
    pub holds: bool,
    pub exactness: Exactness,
    pub reason: Option<String>,
}

fn number_or_string<S: Serializer>(n: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    match n.to_u64() {
        Some(x) => s.serialize_u64(x),
        None => s.serialize_str(&n.to_string()),
    }
}

impl LllCertificate {
    pub fn to_json(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("plain data");
        if !self.ln_lhs.is_finite() {
            v["ln_lhs"] = json!("-inf");
        }
        v
    }
}

/// Parameters fixed across values of `n`.
pub(crate) struct Lll {
    t_vec: Vec<u64>,
    r: u64,
    inj: u64,
    delta: u64,
    e_tilde: u64,
    t_max: u64,
}

impl Lll {
    pub(crate) fn new(g: &Graph, h: &Graph, r: usize, t_vec: &[u64]) -> Result<Self> {
        if h.edge_count() == 0 {
            return Err(Error::EmptyPattern);
        }
        if r == 0 {
            return Err(Error::ZeroColours);
        }
        if t_vec.len() != h.vertex_count() {
            return Err(Error::SizeMismatch {
                expected: h.vertex_count(),
                actual: t_vec.len(),
            });
        }
        if t_vec.contains(&0) {
            return Err(Error::ZeroClassSize);
        }
        let edges = h.edges();
        let delta = edges.iter().map(|&(i, j)| t_vec[i] * t_vec[j]).max().unwrap_or(0);
        let e_tilde = edges.iter().map(|&(i, j)| t_vec[i] * t_vec[j]).sum();
        Ok(Self {
            t_vec: t_vec.to_vec(),
            r: r as u64,
            inj: inj_count(h, g),
            delta,
            e_tilde,
            t_max: t_vec.iter().copied().max().unwrap_or(0),
        })
    }

    fn ln_binomial(n: &BigUint, ln_n: f64, t: u64) -> f64 {
        // Σ ln(n - i) - ln t!, written as t ln n + Σ ln(1 - i/n) to stay
        // accurate for huge n
        let nf = n.to_f64().unwrap_or(f64::INFINITY);
        let falling: f64 = (0..t).map(|i| (-(i as f64) / nf).ln_1p()).sum();
        t as f64 * ln_n + falling - ln_gamma(t as f64 + 1.0)
    }

    /// `(ln LHS, ln d)`.
    fn ln_parts(&self, n: &BigUint) -> (f64, f64) {
        let ln_n = ln_big(n);
        let binomials: f64 = self.t_vec.iter().map(|&t| Self::ln_binomial(n, ln_n, t)).sum();
        let ln_d = (self.inj as f64).ln() + (self.e_tilde as f64).ln() + (self.delta as f64).ln() - 2.0 * ln_n + binomials;
        (1.0 + self.ln_p() + ln_d, ln_d)
    }

    fn ln_p(&self) -> f64 {
        (1.0 - self.e_tilde as f64) * (self.r as f64).ln()
    }

    /// Exact comparison of the LHS with 1 using rational brackets for `e`;
    /// `None` only if the brackets straddle 1.
    pub(crate) fn holds_exact(&self, n: &BigUint) -> Option<bool> {
        if self.inj == 0 || *n < BigUint::from(self.t_max) {
            return Some(true);
        }
        let mut core = BigUint::from(self.inj) * self.e_tilde * self.delta;
        for &t in &self.t_vec {
            core *= binomial(n, t);
        }
        let rhs_base: BigUint = BigUint::from(self.r).pow((self.e_tilde - 1) as u32) * n * n;
        let e_lo: BigUint = E_DIGITS.parse().expect("digits");
        let scale = BigUint::from(10u32).pow(E_DIGITS.len() as u32 - 1);
        let e_hi = &e_lo + 1u32;
        if &core * &e_hi <= &rhs_base * &scale {
            Some(true)
        } else if &core * &e_lo > &rhs_base * &scale {
            Some(false)
        } else {
            None
        }
    }

    pub(crate) fn certificate(&self, n: &BigUint) -> LllCertificate {
        let base = |ln_lhs: f64, ln_d: f64, holds, exactness, reason: Option<&str>| LllCertificate {
            t_vec: self.t_vec.clone(),
            n: n.clone(),
            delta: self.delta,
            e_tilde: self.e_tilde,
            inj: self.inj,
            ln_lhs,
            ln_p: self.ln_p(),
            ln_d,
            holds,
            exactness,
            reason: reason.map(str::to_owned),
        };
        if *n < BigUint::from(self.t_max) {
            return base(f64::NEG_INFINITY, f64::NEG_INFINITY, true, Exactness::Rational, Some("no canonical copy"));
        }
        if self.inj == 0 {
            return base(f64::NEG_INFINITY, f64::NEG_INFINITY, true, Exactness::Rational, Some("no copy of H in G"));
        }
        let (ln_lhs, ln_d) = self.ln_parts(n);
        if ln_lhs.abs() < EXACTNESS_MARGIN {
            if let Some(holds) = self.holds_exact(n) {
                return base(ln_lhs, ln_d, holds, Exactness::Rational, None);
            }
        }
        base(ln_lhs, ln_d, ln_lhs <= 0.0, Exactness::Log, None)
    }
}

fn binomial(n: &BigUint, t: u64) -> BigUint {
    let mut c = BigUint::one();
    for i in 0..t {
        c = c * (n - i) / (i + 1);
    }
    c
}

fn ln_big(n: &BigUint) -> f64 {
    let bits = n.bits();
    if bits <= 64 {
        return (n.to_u64().expect("fits").max(1) as f64).ln();
    }
    let shift = bits - 64;
    let top = (n >> shift).to_u64().expect("64 bits") as f64;
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Evaluates the condition for `G[n]` and `H[t_vec]`.
pub fn lll_condition(g: &Graph, h: &Graph, r: usize, t_vec: &[u64], n: &BigUint) -> Result<LllCertificate> {
    Ok(Lll::new(g, h, r, t_vec)?.certificate(n))
}

/// The condition's verdict by exact arithmetic alone, for cross-checking.
pub fn lll_holds_exact(g: &Graph, h: &Graph, r: usize, t_vec: &[u64], n: &BigUint) -> Result<Option<bool>> {
    Ok(Lll::new(g, h, r, t_vec)?.holds_exact(n))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LllMaxN {
    /// Largest `n <= cap` where the condition holds, or 0.
    #[serde(serialize_with = "number_or_string")]
    pub n: BigUint,
    /// Certificate at `n` when `n > 0`.
    pub certificate: Option<LllCertificate>,
    /// A value below `n` where the condition fails, if the confirming scan
    /// found one.
    pub violation: Option<String>,
}

const SCAN_WIDTH: u64 = 8;

/// Largest `n <= n_cap` (default `2^128`) satisfying the condition, by
/// doubling from `max t_i`, bisection, and a downward scan of width 8.
pub fn lll_max_n(g: &Graph, h: &Graph, r: usize, t_vec: &[u64], n_cap: Option<&BigUint>) -> Result<LllMaxN> {
    let lll = Lll::new(g, h, r, t_vec)?;
    let cap = n_cap.cloned().unwrap_or_else(|| BigUint::one() << 128u32);
    let lo = BigUint::from(lll.t_max);
    let none = LllMaxN {
        n: BigUint::zero(),
        certificate: None,
        violation: None,
    };
    let holds = |n: &BigUint| lll.certificate(n).holds;
    if cap < lo || !holds(&lo) {
        return Ok(none);
    }
    // good holds, bad fails (or exceeds the cap)
    let mut good = lo.clone();
    let mut bad = None;
    while good < cap {
        let next = (&good << 1u32).min(cap.clone());
        if holds(&next) {
            good = next;
        } else {
            bad = Some(next);
            break;
        }
    }
    if let Some(mut bad) = bad {
        while &bad - &good > BigUint::one() {
            let mid = (&good + &bad) >> 1u32;
            if holds(&mid) {
                good = mid;
            } else {
                bad = mid;
            }
        }
    }
    let mut violation = None;
    let scan_floor = if good >= &lo + SCAN_WIDTH { &good - SCAN_WIDTH } else { lo.clone() };
    let mut m = good.clone();
    while m > scan_floor {
        m -= 1u32;
        if !holds(&m) {
            violation = Some(m.to_string());
            break;
        }
    }
    Ok(LllMaxN {
        certificate: Some(lll.certificate(&good)),
        n: good,
        violation,
    })
}
