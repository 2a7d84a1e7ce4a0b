//! Closed-form bounds: upper-bound constants from robustness, the
//! local-lemma certificate for non-arrowing, and leading-order lower bounds.
//!
//! All logarithms are natural.

mod lll;

pub use lll::{lll_condition, lll_holds_exact, lll_max_n, Exactness, EXACTNESS_MARGIN, LllCertificate, LllMaxN};

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Pow, Signed, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::colouring::robustness;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::search::SearchConfig;

/// Exponents of the constants `c` and `c0` in `G[c^t] -> H[t, …, t, c0^t]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    /// `ln c = r^v 4^(v^2 - v) / R^v`.
    #[serde(serialize_with = "crate::ser::big_ratio")]
    pub ln_c: BigRational,
    /// `ln c0 = ln c (1 - (R/r)^(v-1))`.
    #[serde(serialize_with = "crate::ser::big_ratio")]
    pub ln_c0: BigRational,
    #[serde(serialize_with = "crate::ser::ratio64")]
    pub robustness_used: Rational64,
    pub r: usize,
    pub v: usize,
    pub e: usize,
    #[serde(serialize_with = "crate::ser::ratio64")]
    pub d: Rational64,
    pub claim: String,
}

impl BoundReport {
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("plain data")
    }
}

fn big(r: Rational64) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

/// Constants for a pattern with the given robustness; no search involved.
pub fn upper_constant_from_robustness(g: &Graph, h: &Graph, r: usize, robustness: Rational64) -> Result<BoundReport> {
    let (v, e) = (h.vertex_count(), h.edge_count());
    if e == 0 {
        return Err(Error::EmptyPattern);
    }
    if r == 0 {
        return Err(Error::ZeroColours);
    }
    if robustness.is_negative() || robustness > Rational64::one() {
        return Err(Error::InvalidParameter(format!("robustness {robustness} outside [0, 1]")));
    }
    if robustness.is_zero() {
        return Err(Error::DoesNotArrow);
    }
    let rb = big(robustness);
    let rr = BigRational::from_integer(BigInt::from(r));
    let four = BigRational::from_integer(BigInt::from(4));
    let ln_c = rr.clone().pow(v as i32) * four.pow((v * v - v) as i32) / rb.clone().pow(v as i32);
    let ln_c0 = &ln_c * (BigRational::one() - (rb / rr).pow(v as i32 - 1));
    let claim = format!("{g}[c^t] canonically {r}-arrows {h}[t,...,t,c0^t] with ln c = {ln_c}, ln c0 = {ln_c0}");
    Ok(BoundReport {
        ln_c,
        ln_c0,
        robustness_used: robustness,
        r,
        v,
        e,
        d: Rational64::new(2 * e as i64, v as i64),
        claim,
    })
}

/// Constants with the robustness of `h` in `g` computed by exhaustive search.
pub fn upper_constant(g: &Graph, h: &Graph, r: usize, cfg: &SearchConfig) -> Result<BoundReport> {
    let rob = robustness(g, h, r, cfg)?;
    upper_constant_from_robustness(g, h, r, rob)
}

/// A positive quantity carried by its natural logarithm.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LogValue {
    pub ln: f64,
    /// Scientific rendering `m.mmme<k>` of `exp(ln)`.
    pub decimal: String,
}

impl LogValue {
    pub fn from_ln(ln: f64) -> Self {
        let log10 = ln / std::f64::consts::LN_10;
        let mut k = log10.floor();
        let mut mant = 10f64.powf(log10 - k);
        if mant >= 9.9995 {
            mant /= 10.0;
            k += 1.0;
        }
        Self {
            ln,
            decimal: format!("{mant:.3}e{k}"),
        }
    }

    pub fn value(&self) -> f64 {
        self.ln.exp()
    }
}

fn average_degree(h: &Graph) -> Result<f64> {
    if h.edge_count() == 0 {
        return Err(Error::EmptyPattern);
    }
    Ok(2.0 * h.edge_count() as f64 / h.vertex_count() as f64)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AsymptoticBound {
    /// `(r^(d/v) / e) t r^(d t / 2)`.
    pub value: LogValue,
    /// `r^(d/2)`: the per-`t` growth factor.
    pub growth_base: f64,
}

/// Leading-order lower bound for the blowup Ramsey number with all parts
/// of size `t`.
pub fn asymptotic_lower(h: &Graph, r: usize, t: usize) -> Result<AsymptoticBound> {
    let d = average_degree(h)?;
    if r == 0 {
        return Err(Error::ZeroColours);
    }
    if t == 0 {
        return Err(Error::InvalidParameter("t must be at least 1".into()));
    }
    let (v, lr, t) = (h.vertex_count() as f64, (r as f64).ln(), t as f64);
    let ln = d / v * lr - 1.0 + t.ln() + d * t / 2.0 * lr;
    Ok(AsymptoticBound {
        value: LogValue::from_ln(ln),
        growth_base: (d / 2.0 * lr).exp(),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AsymmetricBound {
    /// `m = (t/e) (r^d k)^t`.
    pub m: LogValue,
    /// `d ln r + ln k`, the exponent per unit of `t`.
    pub per_t_exponent: f64,
    pub claim: String,
}

impl AsymmetricBound {
    pub fn to_json(&self) -> Value {
        json!({
            "ln_m": self.m.ln,
            "m": self.m.decimal,
            "per_t_exponent": self.per_t_exponent,
            "claim": self.claim,
        })
    }
}

/// Size `m` with `G[m]` not canonically `r`-arrowing `H[t, …, t, k^t]`.
/// The exponent uses the average degree `d(H)`.
pub fn asymmetric_nonarrow_bound(h: &Graph, r: usize, t: usize, ln_k: f64) -> Result<AsymmetricBound> {
    let d = average_degree(h)?;
    if r == 0 {
        return Err(Error::ZeroColours);
    }
    if t == 0 {
        return Err(Error::InvalidParameter("t must be at least 1".into()));
    }
    if !(ln_k > 0.0 && ln_k.is_finite()) {
        return Err(Error::InvalidParameter(format!("ln k must be positive, got {ln_k}")));
    }
    let per_t = d * (r as f64).ln() + ln_k;
    let m = LogValue::from_ln((t as f64).ln() - 1.0 + t as f64 * per_t);
    let claim = format!(
        "G[m] does not canonically {r}-arrow {h}[t,...,t,k^t] for t = {t}, ln k = {ln_k}, ln m = {:.6}",
        m.ln
    );
    Ok(AsymmetricBound {
        m,
        per_t_exponent: per_t,
        claim,
    })
}
