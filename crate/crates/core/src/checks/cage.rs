//! Cage certificates and the complete-graph criterion.

use serde::Serialize;

use super::{check_local_sdt, lift_group};
use crate::error::{Error, Result};
use crate::geometry::complete;
use crate::graph::{diameter, girth, is_connected, moore_bound, Graph};
use crate::perm::PermGroup;

/// Girths a cage arising from a locally (G,2d)-distance transitive
/// subdivision can have.
pub const CAGE_GIRTHS: [usize; 6] = [3, 4, 5, 6, 8, 12];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CageCertificate {
    pub n: usize,
    pub regular: bool,
    pub valency: Option<usize>,
    pub girth: Option<usize>,
    pub moore_bound: Option<u128>,
    pub is_cage: bool,
    pub girth_allowed: bool,
}

pub fn cage_certificate(g: &Graph) -> Result<CageCertificate> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let valency = g.regular_degree();
    let gi = girth(g);
    let moore = match (valency, gi) {
        (Some(k), Some(gg)) if k >= 2 => Some(moore_bound(k as u64, gg as u64)),
        _ => None,
    };
    Ok(CageCertificate {
        n: g.n(),
        regular: valency.is_some(),
        valency,
        girth: gi,
        moore_bound: moore,
        is_cage: moore == Some(g.n() as u128),
        girth_allowed: gi.is_some_and(|x| CAGE_GIRTHS.contains(&x)),
    })
}

/// Both sides of the complete-graph criterion for `S(K_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RemarkReport {
    pub n: usize,
    pub order: String,
    pub three_transitive: bool,
    pub four_transitive: bool,
    /// `n = 9`, `|G| = 1512` and `G` is 3-transitive.
    pub pgammal_2_8: bool,
    /// `S(K_n)` is locally (G,2)-distance transitive.
    pub ldt_2: bool,
    pub full_depth: usize,
    /// `S(K_n)` is locally G-distance transitive.
    pub ldt_full: bool,
    /// `ldt_2` agrees with 3-transitivity.
    pub level_2_agrees: bool,
    /// `ldt_full` agrees with 4-transitivity or the `PΓL(2,8)` exception.
    pub full_agrees: bool,
}

pub fn remark_kn_check(n: usize, group: &PermGroup) -> Result<RemarkReport> {
    if n < 4 {
        return Err(Error::Unsupported(format!("complete-graph criterion needs n >= 4, got {n}")));
    }
    if group.degree() != n {
        return Err(Error::DegreeMismatch { expected: n, got: group.degree() });
    }
    let kn = complete(n)?;
    let (s, _, lifted) = lift_group(&kn, group)?;
    let full_depth = diameter(&s)?;
    let three_transitive = group.is_k_transitive(3)?;
    let four_transitive = group.is_k_transitive(4)?;
    let pgammal_2_8 = n == 9 && group.order_u64() == 1512 && three_transitive;
    let ldt_2 = check_local_sdt(&s, &lifted, 2)?.verdict;
    let ldt_full = check_local_sdt(&s, &lifted, full_depth)?.verdict;
    Ok(RemarkReport {
        n,
        order: group.order().to_string(),
        three_transitive,
        four_transitive,
        pgammal_2_8,
        ldt_2,
        full_depth,
        ldt_full,
        level_2_agrees: ldt_2 == three_transitive,
        full_agrees: ldt_full == (four_transitive || pgammal_2_8),
    })
}
