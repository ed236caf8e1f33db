//! Condition (*) for subgroups of `S_n wr S_2` acting on `K_{n,n}`, with
//! biparts `Δ1 = 0..n` and `Δ2 = n..2n`.

use serde::Serialize;

use super::lift_group;
use crate::error::{Error, Result};
use crate::geometry::complete_bipartite;
use crate::perm::{PermGroup, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarReport {
    pub n: usize,
    pub order: String,
    /// Some element interchanges the biparts.
    pub swaps_biparts: bool,
    pub bipart_preserving_order: String,
    /// The bipart-preserving subgroup is 2-transitive on each bipart.
    pub clause_i: bool,
    /// `G_{u1}` is transitive on `(Δ1 \ {u1}) x Δ2`, for `u1 = 0`.
    pub clause_ii: bool,
    /// The same for a second representative `u1 = n - 1`.
    pub clause_ii_second: bool,
    /// `G_{{u1,u2}}` interchanges `u1` and `u2`, for `u1 = 0`, `u2 = n`.
    pub clause_iii_interchange: bool,
    /// `G_{{u1,u2}}` is transitive on the edges `{v1,v2}` missing both.
    pub clause_iii_transitive: bool,
    pub verdict: bool,
}

fn swaps(p: &Permutation, n: usize) -> Result<bool> {
    let side = |x: usize| x >= n;
    let flip = side(p.apply(0));
    if (0..2 * n).all(|x| side(p.apply(x)) == (side(x) != flip)) {
        Ok(flip)
    } else {
        Err(Error::BipartitionNotPreserved)
    }
}

/// The subgroup fixing both biparts, by Schreier generators over `{1, t}`
/// for a bipart-swapping generator `t`.
pub(crate) fn bipart_preserving(group: &PermGroup, n: usize) -> Result<PermGroup> {
    let flags = group.generators().iter().map(|p| swaps(p, n)).collect::<Result<Vec<_>>>()?;
    let Some(t) = group.generators().iter().zip(&flags).find(|(_, &f)| f).map(|(p, _)| p.clone()) else {
        return Ok(group.clone());
    };
    let t_inv = t.inverse();
    let mut gens = Vec::new();
    for (p, &f) in group.generators().iter().zip(&flags) {
        if f {
            gens.push(p.then(&t_inv));
            gens.push(t.then(p));
        } else {
            gens.push(p.clone());
            gens.push(t.then(p).then(&t_inv));
        }
    }
    PermGroup::new(2 * n, gens)
}

fn clause_ii_at(group: &PermGroup, n: usize, u1: usize) -> bool {
    let stab = group.stabilizer(u1);
    let v1 = if u1 == 0 { 1 } else { 0 };
    stab.tuple_orbit(&[v1, n]).len() == (n - 1) * n
}

pub fn condition_star(group: &PermGroup, n: usize) -> Result<StarReport> {
    if n < 2 {
        return Err(Error::Unsupported(format!("Condition (*) needs n >= 2, got {n}")));
    }
    if group.degree() != 2 * n {
        return Err(Error::DegreeMismatch { expected: 2 * n, got: group.degree() });
    }
    let plus = bipart_preserving(group, n)?;
    let delta1: Vec<usize> = (0..n).collect();
    let delta2: Vec<usize> = (n..2 * n).collect();
    let clause_i = plus.is_k_transitive_on(&delta1, 2)? && plus.is_k_transitive_on(&delta2, 2)?;
    let clause_ii = clause_ii_at(group, n, 0);
    let clause_ii_second = clause_ii_at(group, n, n - 1);

    let knn = complete_bipartite(n, n)?;
    let (_, map, lifted) = lift_group(&knn, group)?;
    let e = map.edge_vertex(0, n).unwrap();
    let edge_stab = lifted.stabilizer(e);
    let clause_iii_interchange = edge_stab.generators().iter().any(|p| p.apply(0) == n);
    let far: Vec<usize> = (1..n)
        .flat_map(|v1| (n + 1..2 * n).map(move |v2| (v1, v2)))
        .map(|(v1, v2)| map.edge_vertex(v1, v2).unwrap())
        .collect();
    let clause_iii_transitive = edge_stab.orbit_sizes_on(&far)?.len() == 1;
    let verdict = clause_i && clause_ii && clause_ii_second && clause_iii_interchange && clause_iii_transitive;
    Ok(StarReport {
        n,
        order: group.order().to_string(),
        swaps_biparts: plus.order() != group.order(),
        bipart_preserving_order: plus.order().to_string(),
        clause_i,
        clause_ii,
        clause_ii_second,
        clause_iii_interchange,
        clause_iii_transitive,
        verdict,
    })
}

/// `S_n wr S_2` on `K_{n,n}`.
pub fn wreath_full(n: usize) -> PermGroup {
    wreath_of(n, PermGroup::symmetric(n).generators(), true)
}

/// `H wr S_2` (or `H x H` without the swap) from generators of `H` on `0..n`.
pub fn wreath_of(n: usize, component: &[Permutation], with_swap: bool) -> PermGroup {
    let mut gens = Vec::new();
    for h in component {
        let left: Vec<usize> = (0..2 * n).map(|x| if x < n { h.apply(x) } else { x }).collect();
        let right: Vec<usize> = (0..2 * n).map(|x| if x < n { x } else { n + h.apply(x - n) }).collect();
        gens.push(Permutation::from_images(left).unwrap());
        gens.push(Permutation::from_images(right).unwrap());
    }
    if with_swap {
        gens.push(Permutation::from_images((0..2 * n).map(|x| (x + n) % (2 * n)).collect()).unwrap());
    }
    PermGroup::new(2 * n, gens).unwrap()
}
