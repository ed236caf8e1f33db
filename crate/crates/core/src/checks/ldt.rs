//! Local (G,s)-distance transitivity.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bfs_distances, Graph, UNREACHABLE};
use crate::perm::PermGroup;

/// Orbits of a vertex stabilizer on one sphere.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DepthOrbits {
    pub depth: usize,
    pub sphere_size: usize,
    pub orbit_sizes: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepresentativeReport {
    pub vertex: usize,
    pub orbit_size: usize,
    pub eccentricity: usize,
    pub stabilizer_order: String,
    pub depths: Vec<DepthOrbits>,
    /// Requested depths beyond the eccentricity, whose spheres are empty.
    pub skipped: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LdtFailure {
    pub vertex: usize,
    pub depth: usize,
    pub orbit_sizes: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LdtResult {
    pub s: usize,
    pub verdict: bool,
    pub failure: Option<LdtFailure>,
    pub representatives: Vec<RepresentativeReport>,
}

/// Checks that `group` acts on `gamma` by automorphisms.
pub fn ensure_automorphisms(gamma: &Graph, group: &PermGroup) -> Result<()> {
    if group.degree() != gamma.n() {
        return Err(Error::DegreeMismatch { expected: gamma.n(), got: group.degree() });
    }
    for (i, p) in group.generators().iter().enumerate() {
        if !gamma.is_automorphism(&p.to_vec()) {
            return Err(Error::NotAutomorphism(format!("generator {i} does not preserve adjacency")));
        }
    }
    Ok(())
}

/// Stabilizer orbits of `x` on the spheres `Γ_i(x)`, `1 <= i <= s`.
/// Assumes `group` has been checked with [`ensure_automorphisms`].
pub fn representative_report(gamma: &Graph, group: &PermGroup, x: usize, s: usize) -> Result<RepresentativeReport> {
    let dist = bfs_distances(gamma, x);
    if dist.contains(&UNREACHABLE) {
        return Err(Error::Disconnected);
    }
    let ecc = dist.iter().copied().max().unwrap_or(0);
    let mut spheres = vec![Vec::new(); ecc + 1];
    for (v, &d) in dist.iter().enumerate() {
        spheres[d].push(v);
    }
    let stab = group.stabilizer(x);
    let depths = (1..=s.min(ecc))
        .map(|i| {
            Ok(DepthOrbits {
                depth: i,
                sphere_size: spheres[i].len(),
                orbit_sizes: stab.orbit_sizes_on(&spheres[i])?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RepresentativeReport {
        vertex: x,
        orbit_size: group.orbit(x).len(),
        eccentricity: ecc,
        stabilizer_order: stab.order().to_string(),
        depths,
        skipped: (ecc + 1..=s.min(gamma.n())).collect(),
    })
}

/// Whether `G_x` is transitive on every nonempty `Γ_i(x)`, `1 <= i <= s`,
/// for all `x`. One representative per `G`-orbit is examined.
pub fn check_local_sdt(gamma: &Graph, group: &PermGroup, s: usize) -> Result<LdtResult> {
    ensure_automorphisms(gamma, group)?;
    let reps = group.orbits().representatives;
    let representatives = reps
        .par_iter()
        .map(|&x| representative_report(gamma, group, x, s))
        .collect::<Result<Vec<_>>>()?;
    let failure = representatives.iter().find_map(|r| {
        r.depths.iter().find(|d| d.orbit_sizes.len() != 1).map(|d| LdtFailure {
            vertex: r.vertex,
            depth: d.depth,
            orbit_sizes: d.orbit_sizes.clone(),
        })
    });
    Ok(LdtResult { s, verdict: failure.is_none(), failure, representatives })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autsolve::{automorphism_group, Coloring};
    use crate::checks::lift_group;
    use crate::geometry::{cycle, petersen};

    fn full(g: &Graph) -> PermGroup {
        automorphism_group(g, &Coloring::unit(g.n())).unwrap()
    }

    #[test]
    fn subdivided_petersen_is_locally_distance_transitive() {
        let sigma = petersen();
        let (s, _, g) = lift_group(&sigma, &full(&sigma)).unwrap();
        let r = check_local_sdt(&s, &g, 6).unwrap();
        assert!(r.verdict);
        assert_eq!(r.representatives.len(), 2);
        let orig = &r.representatives[0];
        assert_eq!(orig.vertex, 0);
        let sizes: Vec<usize> = orig.depths.iter().map(|d| d.sphere_size).collect();
        assert_eq!(sizes, vec![3, 3, 6, 6, 6]);
        assert_eq!(r.representatives[1].eccentricity, 6);
    }

    #[test]
    fn trivial_group_fails_at_depth_one() {
        let c = cycle(6).unwrap();
        let r = check_local_sdt(&c, &PermGroup::trivial(6), 1).unwrap();
        assert!(!r.verdict);
        assert_eq!(r.failure.unwrap().depth, 1);
    }

    #[test]
    fn depth_beyond_eccentricity_is_skipped() {
        let c = cycle(5).unwrap();
        let r = check_local_sdt(&c, &full(&c), 4).unwrap();
        assert!(r.verdict);
        assert_eq!(r.representatives[0].eccentricity, 2);
        assert_eq!(r.representatives[0].skipped, vec![3, 4]);
    }

    #[test]
    fn non_automorphism_is_rejected() {
        let c = cycle(5).unwrap();
        let bad = crate::perm::Permutation::from_cycles(5, &[&[0, 1]]).unwrap();
        let g = PermGroup::new(5, vec![bad]).unwrap();
        assert!(matches!(check_local_sdt(&c, &g, 1), Err(Error::NotAutomorphism(_))));
    }
}
