use num_rational::Rational64;
use serde::Serialize;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DensityReport {
    /// `d(H) = 2e(H)/v(H)`.
    #[serde(serialize_with = "crate::ser::ratio64")]
    pub average_degree: Rational64,
    /// `m(H)`: max of `e(J)/v(J)` over subgraphs `J`.
    #[serde(serialize_with = "crate::ser::ratio64")]
    pub max_density: Rational64,
    /// `m_2(H)`: max of `d_2(J)` over subgraphs with at least one edge.
    #[serde(serialize_with = "crate::ser::ratio64")]
    pub two_density: Rational64,
}

/// Densities by enumeration of vertex subsets; for a fixed vertex set the
/// induced subgraph maximises both `e/v` and `(e-1)/(v-2)`.
pub fn density_stats(h: &Graph) -> Result<DensityReport> {
    let k = h.vertex_count();
    let e = h.edge_count();
    if e == 0 {
        return Err(Error::EmptyPattern);
    }
    if k > 24 {
        return Err(Error::InvalidParameter(format!("density enumeration supports at most 24 vertices, got {k}")));
    }
    let rows: Vec<u32> = (0..k)
        .map(|v| h.neighbours(v).fold(0u32, |acc, u| acc | 1 << u))
        .collect();
    let mut max_density = Rational64::from_integer(0);
    let mut two_density = Rational64::new(1, 2);
    for set in 1u32..(1u32 << k) {
        let v = set.count_ones() as i64;
        let mut twice_e = 0i64;
        let mut rest = set;
        while rest != 0 {
            let x = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            twice_e += (rows[x] & set).count_ones() as i64;
        }
        let ej = twice_e / 2;
        max_density = max_density.max(Rational64::new(ej, v));
        if v >= 3 && ej >= 1 {
            two_density = two_density.max(Rational64::new(ej - 1, v - 2));
        }
    }
    Ok(DensityReport {
        average_degree: Rational64::new(2 * e as i64, k as i64),
        max_density,
        two_density,
    })
}
