//! Random graph strategies shared by the property suites.

#![allow(dead_code)]

use proptest::prelude::*;
use subdiv_ldt::graph::Graph;
use subdiv_ldt::perm::Permutation;

/// Connected graphs on `2..=max_n` vertices: a random spanning tree plus
/// random extra edges.
pub fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let parents = (1..n).map(|i| 0..i).collect::<Vec<_>>();
        let extra = prop::collection::vec((0..n, 0..n), 0..=2 * n);
        (Just(n), parents, extra).prop_map(|(n, parents, extra)| {
            let tree = parents.into_iter().enumerate().map(|(i, p)| (i + 1, p));
            let chords = extra.into_iter().filter(|(u, v)| u != v);
            Graph::from_edges(n, tree.chain(chords)).unwrap()
        })
    })
}

/// Connected bipartite graphs: every vertex after the first two attaches to
/// an earlier vertex on the other side.
pub fn connected_bipartite(max_n: usize) -> impl Strategy<Value = Graph> {
    (3..=max_n).prop_flat_map(|n| {
        let sides = prop::collection::vec(any::<bool>(), n - 2);
        let picks = prop::collection::vec(any::<prop::sample::Index>(), n - 2);
        let extra = prop::collection::vec((0..n, 0..n), 0..=2 * n);
        (Just(n), sides, picks, extra).prop_map(|(n, sides, picks, extra)| {
            let mut side = vec![false, true];
            side.extend(sides);
            let mut edges = vec![(0, 1)];
            for v in 2..n {
                let opposite: Vec<usize> = (0..v).filter(|&u| side[u] != side[v]).collect();
                edges.push((v, opposite[picks[v - 2].index(opposite.len())]));
            }
            edges.extend(extra.into_iter().filter(|&(u, v)| side[u] != side[v]));
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// Connected graphs of minimum valency at least 2: a Hamiltonian cycle plus
/// chords.
pub fn cycle_with_chords(max_n: usize) -> impl Strategy<Value = Graph> {
    (3..=max_n).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..=n).prop_map(move |extra| {
            let ring = (0..n).map(|i| (i, (i + 1) % n));
            Graph::from_edges(n, ring.chain(extra.into_iter().filter(|(u, v)| u != v))).unwrap()
        })
    })
}

pub fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

/// `g` with vertex `v` renamed `p(v)`.
pub fn relabel(g: &Graph, p: &Permutation) -> Graph {
    Graph::from_edges(g.n(), g.edges().into_iter().map(|(u, v)| (p.apply(u), p.apply(v)))).unwrap()
}

/// Every permutation of `0..n`, by Heap's algorithm.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut a: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    let mut out = vec![a.clone()];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}
