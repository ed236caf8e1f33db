use serde::Serialize;

use super::{bipartition, diameter, girth, subdivision, Graph};
use crate::error::Result;

/// Invariants of a connected graph and of its subdivision.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub m: usize,
    pub min_valency: usize,
    pub max_valency: usize,
    /// `None` for forests.
    pub girth: Option<usize>,
    pub diameter: usize,
    /// Diameter of the subdivision graph.
    pub subdivision_diameter: usize,
    /// `subdivision_diameter - 2 * diameter`, always in `{0, 1, 2}`.
    pub delta: usize,
    pub bipartite: bool,
    /// Moore bound for the valency and girth, when the graph is regular with a cycle.
    pub moore_bound: Option<u128>,
    pub is_cage: bool,
}

/// Smallest possible order of a `k`-regular graph of girth `g`.
///
/// Odd `g`: `1 + k + k(k-1) + ... + k(k-1)^((g-3)/2)`.
/// Even `g`: `2(1 + (k-1) + ... + (k-1)^((g-2)/2))`.
pub fn moore_bound(k: u64, g: u64) -> u128 {
    assert!(k >= 2 && g >= 3, "moore bound needs k >= 2 and g >= 3");
    let k = k as u128;
    let r = k - 1;
    if g % 2 == 1 {
        let mut total = 1u128;
        let mut term = k;
        for _ in 0..=(g - 3) / 2 {
            total += term;
            term *= r;
        }
        total
    } else {
        let mut total = 0u128;
        let mut term = 1u128;
        for _ in 0..=(g - 2) / 2 {
            total += term;
            term *= r;
        }
        2 * total
    }
}

pub fn analyze(g: &Graph) -> Result<AnalysisReport> {
    let d = diameter(g)?;
    let (s, _) = subdivision(g);
    let big_d = diameter(&s)?;
    let gi = girth(g);
    let (lo, hi) = g.valency();
    let moore = match (g.regular_degree(), gi) {
        (Some(k), Some(gg)) if k >= 2 => Some(moore_bound(k as u64, gg as u64)),
        _ => None,
    };
    Ok(AnalysisReport {
        n: g.n(),
        m: g.m(),
        min_valency: lo,
        max_valency: hi,
        girth: gi,
        diameter: d,
        subdivision_diameter: big_d,
        delta: big_d - 2 * d,
        bipartite: bipartition(g).is_some(),
        moore_bound: moore,
        is_cage: moore == Some(g.n() as u128),
    })
}
