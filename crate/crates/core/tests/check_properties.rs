//! Distance-transitivity and arc-transitivity checks against brute force.

mod common;

use std::collections::HashSet;

use common::{connected_graph, cycle_with_chords};
use proptest::prelude::*;
use subdiv_ldt::autsolve::{automorphism_group, Coloring};
use subdiv_ldt::checks::{check_arc_transitive, check_local_sdt, lift_group, representative_report, DEFAULT_ARC_CAP};
use subdiv_ldt::graph::{bfs_distances, Graph};
use subdiv_ldt::perm::PermGroup;

fn full(g: &Graph) -> PermGroup {
    automorphism_group(g, &Coloring::unit(g.n())).unwrap()
}

/// Local s-distance transitivity by enumerating group elements: for each
/// vertex, every pair at the same distance `<= s` is related by an element
/// fixing the vertex.
fn ldt_oracle(g: &Graph, group: &PermGroup, s: usize) -> bool {
    let elems = group.enumerate_elements(1_000_000).unwrap();
    (0..g.n()).all(|x| {
        let dist = bfs_distances(g, x);
        let stab: Vec<_> = elems.iter().filter(|p| p.apply(x) == x).collect();
        (1..=s).all(|i| {
            let sphere: Vec<usize> = (0..g.n()).filter(|&v| dist[v] == i).collect();
            let Some(&first) = sphere.first() else { return true };
            let reach: HashSet<usize> = stab.iter().map(|p| p.apply(first)).collect();
            reach.len() == sphere.len()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn check_agrees_with_element_enumeration(sigma in connected_graph(7), s in 1usize..=6) {
        let aut = full(&sigma);
        let (g, _, lifted) = lift_group(&sigma, &aut).unwrap();
        prop_assert_eq!(check_local_sdt(&g, &lifted, s).unwrap().verdict, ldt_oracle(&g, &lifted, s));
    }

    #[test]
    fn conjugate_representatives_agree(g in connected_graph(30)) {
        let aut = full(&g);
        let s = subdiv_ldt::graph::diameter(&g).unwrap();
        for x in [0, g.n() - 1] {
            let here = representative_report(&g, &aut, x, s).unwrap();
            for p in aut.generators() {
                let there = representative_report(&g, &aut, p.apply(x), s).unwrap();
                let sizes = |r: &subdiv_ldt::checks::RepresentativeReport| {
                    r.depths.iter().map(|d| d.orbit_sizes.clone()).collect::<Vec<_>>()
                };
                prop_assert_eq!(sizes(&here), sizes(&there));
                prop_assert_eq!(&here.stabilizer_order, &there.stabilizer_order);
            }
        }
    }

    #[test]
    fn verdicts_are_monotone_in_depth(g in connected_graph(30)) {
        let aut = full(&g);
        let d = subdiv_ldt::graph::diameter(&g).unwrap();
        let verdicts: Vec<bool> = (1..=d).map(|s| check_local_sdt(&g, &aut, s).unwrap().verdict).collect();
        prop_assert!(verdicts.windows(2).all(|w| w[0] || !w[1]));
    }

    #[test]
    fn arc_transitivity_is_monotone(g in cycle_with_chords(12)) {
        let aut = full(&g);
        let verdicts: Vec<bool> = (1..=4)
            .map(|s| check_arc_transitive(&g, &aut, s, DEFAULT_ARC_CAP).unwrap().verdict)
            .collect();
        prop_assert!(verdicts.windows(2).all(|w| w[0] || !w[1]));
        let sizes: Vec<usize> = check_arc_transitive(&g, &aut, 2, DEFAULT_ARC_CAP).unwrap().orbit_sizes;
        prop_assert!(sizes.iter().all(|&k| (aut.order_u64() as usize).is_multiple_of(k)));
    }
}
