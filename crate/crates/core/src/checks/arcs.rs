//! (G,s)-arc transitivity.
//!
//! Arcs are never materialized: each s-arc is identified with its rank in
//! lexicographic order, computed from tables of non-backtracking
//! continuation counts. Orbits are found by breadth-first closure over ranks
//! with a visited bitmap.

use std::collections::VecDeque;

use serde::Serialize;

use super::ldt::ensure_automorphisms;
use crate::error::{Error, Result};
use crate::graph::{bfs_distances, Graph};
use crate::perm::PermGroup;

/// Default maximum number of s-arcs enumerated.
pub const DEFAULT_ARC_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArcTransResult {
    pub s: usize,
    pub arc_count: u64,
    pub orbit_count: usize,
    pub orbit_sizes: Vec<usize>,
    pub verdict: bool,
    /// Number of s-arcs whose endpoints are at distance s.
    pub geodesic_count: u64,
    pub all_geodesic: bool,
}

/// Ranking tables for the s-arcs of a graph.
struct ArcIndex<'a> {
    g: &'a Graph,
    s: usize,
    offsets: Vec<usize>,
    /// `cont[j][e]`: non-backtracking walks of `j` more steps after the
    /// directed edge `e`.
    cont: Vec<Vec<u64>>,
    /// Arcs starting before vertex `v`.
    start: Vec<u64>,
}

impl<'a> ArcIndex<'a> {
    fn new(g: &'a Graph, s: usize) -> Self {
        let n = g.n();
        let mut offsets = vec![0; n + 1];
        for v in 0..n {
            offsets[v + 1] = offsets[v] + g.degree(v);
        }
        let mut index = ArcIndex { g, s, offsets, cont: Vec::new(), start: Vec::new() };
        let mut cont = vec![vec![1u64; index.offsets[n]]];
        for j in 1..s.max(1) {
            let prev = &cont[j - 1];
            let mut next = vec![0u64; index.offsets[n]];
            for a in 0..n {
                for (i, &b) in g.neighbors(a).iter().enumerate() {
                    next[index.offsets[a] + i] = g
                        .neighbors(b)
                        .iter()
                        .enumerate()
                        .filter(|&(_, &c)| c != a)
                        .fold(0u64, |acc, (k, _)| acc.saturating_add(prev[index.offsets[b] + k]));
                }
            }
            cont.push(next);
        }
        index.cont = cont;
        let mut start = vec![0u64; n + 1];
        for v in 0..n {
            let from_v = if s == 0 {
                1
            } else {
                (0..g.degree(v)).fold(0u64, |acc, i| acc.saturating_add(index.cont[s - 1][index.offsets[v] + i]))
            };
            start[v + 1] = start[v].saturating_add(from_v);
        }
        index.start = start;
        index
    }

    fn total(&self) -> u64 {
        self.start[self.g.n()]
    }

    fn edge(&self, a: usize, b: usize) -> usize {
        self.offsets[a] + self.g.neighbors(a).binary_search(&b).unwrap()
    }

    fn rank(&self, arc: &[usize]) -> u64 {
        let mut r = self.start[arc[0]];
        for j in 0..self.s {
            let (v, next) = (arc[j], arc[j + 1]);
            let prev = if j > 0 { Some(arc[j - 1]) } else { None };
            for &w in self.g.neighbors(v) {
                if w >= next {
                    break;
                }
                if Some(w) != prev {
                    r += self.cont[self.s - j - 1][self.edge(v, w)];
                }
            }
        }
        r
    }

    fn unrank(&self, mut r: u64, arc: &mut Vec<usize>) {
        arc.clear();
        let v0 = self.start.partition_point(|&x| x <= r) - 1;
        r -= self.start[v0];
        arc.push(v0);
        for j in 0..self.s {
            let v = arc[j];
            let prev = if j > 0 { Some(arc[j - 1]) } else { None };
            for &w in self.g.neighbors(v) {
                if Some(w) == prev {
                    continue;
                }
                let c = self.cont[self.s - j - 1][self.edge(v, w)];
                if r < c {
                    arc.push(w);
                    break;
                }
                r -= c;
            }
        }
    }
}

/// Number of s-arcs of `g`, saturating at `u64::MAX`.
pub fn count_arcs(g: &Graph, s: usize) -> u64 {
    ArcIndex::new(g, s).total()
}

/// Orbits of `group` on the s-arcs of `g`.
pub fn check_arc_transitive(g: &Graph, group: &PermGroup, s: usize, cap: u64) -> Result<ArcTransResult> {
    ensure_automorphisms(g, group)?;
    let index = ArcIndex::new(g, s);
    let total = index.total();
    if total > cap {
        return Err(Error::CapExceeded { cap, order: total.to_string() });
    }
    let mut seen = vec![false; total as usize];
    let mut orbit_sizes = Vec::new();
    let mut geodesic_count = 0u64;
    let (mut arc, mut image) = (Vec::with_capacity(s + 1), Vec::with_capacity(s + 1));
    for r0 in 0..total {
        if seen[r0 as usize] {
            continue;
        }
        seen[r0 as usize] = true;
        let mut queue = VecDeque::from([r0]);
        let mut size = 0usize;
        while let Some(r) = queue.pop_front() {
            size += 1;
            index.unrank(r, &mut arc);
            for p in group.generators() {
                image.clear();
                image.extend(arc.iter().map(|&x| p.apply(x)));
                let ri = index.rank(&image);
                if !seen[ri as usize] {
                    seen[ri as usize] = true;
                    queue.push_back(ri);
                }
            }
        }
        index.unrank(r0, &mut arc);
        if bfs_distances(g, arc[0])[arc[s]] == s {
            geodesic_count += size as u64;
        }
        orbit_sizes.push(size);
    }
    orbit_sizes.sort_unstable();
    Ok(ArcTransResult {
        s,
        arc_count: total,
        orbit_count: orbit_sizes.len(),
        verdict: orbit_sizes.len() == 1,
        orbit_sizes,
        geodesic_count,
        all_geodesic: geodesic_count == total,
    })
}
