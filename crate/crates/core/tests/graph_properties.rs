//! Invariants of subdivision graphs on random connected graphs.

mod common;

use common::{connected_bipartite, connected_graph, relabel};
use proptest::prelude::*;
use subdiv_ldt::geometry::{cycle, hoffman_singleton, petersen};
use subdiv_ldt::graph::io::{read_edge_list, write_edge_list};
use subdiv_ldt::graph::{
    analyze, bfs_distances, diameter, distance2_components, girth, line_graph, moore_bound, sphere, subdivision,
    Graph,
};

/// Moore bound by the geometric-series closed form.
fn moore_closed_form(k: u128, g: u128) -> u128 {
    if k == 2 {
        return g;
    }
    let r = k - 1;
    if g % 2 == 1 {
        1 + k * (r.pow(((g - 1) / 2) as u32) - 1) / (k - 2)
    } else {
        2 * (r.pow((g / 2) as u32) - 1) / (k - 2)
    }
}

/// Diameter of the subdivision computed from distances in the original
/// graph: two originals are at `2 dist`, an original and an edge `{a,b}` at
/// `1 + 2 min`, two edges at `2 + 2 min` over their endpoints.
fn subdivision_diameter_oracle(g: &Graph) -> usize {
    let dist: Vec<Vec<usize>> = (0..g.n()).map(|v| bfs_distances(g, v)).collect();
    let edges = g.edges();
    let mut best = 2 * dist.iter().flatten().copied().max().unwrap();
    for &(a, b) in &edges {
        for row in &dist {
            best = best.max(1 + 2 * row[a].min(row[b]));
        }
        for &(c, d) in &edges {
            if (a, b) != (c, d) {
                let m = dist[a][c].min(dist[a][d]).min(dist[b][c]).min(dist[b][d]);
                best = best.max(2 + 2 * m);
            }
        }
    }
    best
}

fn same_edges(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edges() == b.edges()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn delta_is_zero_one_or_two(g in connected_graph(40)) {
        let r = analyze(&g).unwrap();
        prop_assert!(r.delta <= 2);
        prop_assert_eq!(r.subdivision_diameter, 2 * r.diameter + r.delta);
        prop_assert_eq!(r.subdivision_diameter, subdivision_diameter_oracle(&g));
    }

    #[test]
    fn bipartite_graphs_have_doubled_diameter(g in connected_bipartite(40)) {
        let r = analyze(&g).unwrap();
        prop_assert!(r.bipartite);
        prop_assert_eq!(r.subdivision_diameter, 2 * r.diameter);
    }

    #[test]
    fn subdivision_doubles_girth(g in connected_graph(40)) {
        let (s, _) = subdivision(&g);
        prop_assert_eq!(girth(&s), girth(&g).map(|x| 2 * x));
    }

    #[test]
    fn distance_two_components_are_graph_and_line_graph(g in connected_graph(40)) {
        prop_assume!(g.m() >= 2);
        let (s, _) = subdivision(&g);
        let split = distance2_components(&s).unwrap();
        prop_assert_eq!(split.first_vertices, (0..g.n()).collect::<Vec<_>>());
        prop_assert!(same_edges(&split.first, &g));
        prop_assert!(same_edges(&split.second, &line_graph(&g)));
    }

    #[test]
    fn moore_bound_matches_closed_form(k in 2u64..=20, g in 3u64..=16) {
        prop_assert_eq!(moore_bound(k, g), moore_closed_form(k as u128, g as u128));
    }

    #[test]
    fn edge_list_round_trip(g in connected_graph(40)) {
        let text = write_edge_list(&g);
        let back = read_edge_list(&text).unwrap();
        prop_assert_eq!(write_edge_list(&back), text);
        prop_assert_eq!(analyze(&back).unwrap(), analyze(&g).unwrap());
    }

    #[test]
    fn analysis_is_invariant_under_relabelling(
        (g, p) in connected_graph(30).prop_flat_map(|g| { let n = g.n(); (Just(g), common::permutation(n)) })
    ) {
        prop_assert_eq!(analyze(&relabel(&g, &p)).unwrap(), analyze(&g).unwrap());
    }
}

#[test]
fn odd_girth_cages_have_moore_sphere_sizes() {
    let mut graphs = vec![petersen(), hoffman_singleton()];
    graphs.extend((3..=11).step_by(2).map(|n| cycle(n).unwrap()));
    for g in graphs {
        let k = g.regular_degree().unwrap();
        let d = diameter(&g).unwrap();
        assert_eq!(girth(&g), Some(2 * d + 1));
        for x in 0..g.n() {
            for i in 1..=d {
                assert_eq!(sphere(&g, x, i).unwrap().len(), k * (k - 1).pow(i as u32 - 1));
            }
        }
    }
}
