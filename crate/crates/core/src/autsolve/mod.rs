//! Graph automorphism groups and isomorphisms by individualization and
//! refinement.
//!
//! Refinement is colour refinement to the coarsest equitable partition, with
//! new cells ranked by `(old colour, sorted neighbour colours)` so the result
//! is a canonical function of the input colouring. The search follows one
//! first path to a discrete partition, then for each level walks the target
//! cell looking for leaves equivalent to the first leaf. Vertices already in
//! the orbit of the first-path choice under automorphisms found so far are
//! skipped, and each node's quotient-matrix hash must match the first path.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::graph::{bfs_distances, Graph, UNREACHABLE};
use crate::perm::{PermGroup, Permutation};

/// Default maximum vertex count accepted by the solver.
pub const DEFAULT_VERTEX_LIMIT: usize = 4096;

/// Environment variable overriding [`DEFAULT_VERTEX_LIMIT`].
pub const VERTEX_LIMIT_ENV: &str = "SDT_VERTEX_LIMIT";

/// The vertex limit from the environment, or the default.
pub fn vertex_limit() -> usize {
    std::env::var(VERTEX_LIMIT_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_VERTEX_LIMIT)
}

/// Ordered partition of the vertex set; colour `c` is the `c`-th cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
    cells: usize,
}

impl Coloring {
    pub fn unit(n: usize) -> Self {
        Coloring { colors: vec![0; n], cells: usize::from(n > 0) }
    }

    /// Colouring from arbitrary labels; cells are ordered by label value.
    pub fn from_colors(labels: &[usize]) -> Self {
        let mut distinct: Vec<usize> = labels.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let colors = labels.iter().map(|l| distinct.binary_search(l).unwrap()).collect();
        Coloring { colors, cells: distinct.len() }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn cell_count(&self) -> usize {
        self.cells
    }

    pub fn is_discrete(&self) -> bool {
        self.cells == self.colors.len()
    }

    /// Cells in colour order, each ascending.
    pub fn cells(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.cells];
        for (v, &c) in self.colors.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    /// Splits `v` off its cell, placing `{v}` first.
    fn individualize(&self, v: usize) -> Coloring {
        let c = self.colors[v];
        let colors = self
            .colors
            .iter()
            .enumerate()
            .map(|(w, &x)| if w == v || x < c { x } else { x + 1 })
            .collect();
        Coloring { colors, cells: self.cells + 1 }
    }

    /// First smallest non-singleton cell.
    fn target_cell(&self) -> Vec<usize> {
        let mut sizes = vec![0usize; self.cells];
        for &c in &self.colors {
            sizes[c] += 1;
        }
        let best = (0..self.cells)
            .filter(|&c| sizes[c] > 1)
            .min_by_key(|&c| (sizes[c], c))
            .expect("target cell requested on a discrete colouring");
        (0..self.colors.len()).filter(|&v| self.colors[v] == best).collect()
    }
}

/// Coarsest equitable refinement of `c`.
pub fn refine(g: &Graph, c: &Coloring) -> Coloring {
    refine_traced(g, c).0
}

/// Refines `c` and returns a hash of the final quotient matrix.
fn refine_traced(g: &Graph, c: &Coloring) -> (Coloring, u64) {
    let n = g.n();
    let mut colors = c.colors.clone();
    let mut cells = c.cells;
    loop {
        let mut sigs: Vec<(usize, Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb, v)
            })
            .collect();
        sigs.sort_unstable();
        let mut next = vec![0; n];
        let mut rank = 0;
        for i in 0..n {
            if i > 0 && (sigs[i].0, &sigs[i].1) != (sigs[i - 1].0, &sigs[i - 1].1) {
                rank += 1;
            }
            next[sigs[i].2] = rank;
        }
        let next_cells = if n == 0 { 0 } else { rank + 1 };
        if next_cells == cells {
            let mut h = DefaultHasher::new();
            for (c, nb, _) in &sigs {
                (c, nb).hash(&mut h);
            }
            return (Coloring { colors, cells }, h.finish());
        }
        colors = next;
        cells = next_cells;
    }
}

struct Search<'a> {
    g: &'a Graph,
    initial: &'a Coloring,
    traces: Vec<u64>,
    first_leaf: Vec<usize>,
}

impl Search<'_> {
    fn child(&self, node: &Coloring, v: usize) -> (Coloring, u64) {
        refine_traced(self.g, &node.individualize(v))
    }

    /// Permutation taking the first leaf to `leaf`, if it is an automorphism.
    fn leaf_automorphism(&self, leaf: &Coloring) -> Option<Permutation> {
        let mut vertex_of = vec![0; leaf.len()];
        for (v, &c) in leaf.colors.iter().enumerate() {
            vertex_of[c] = v;
        }
        let images: Vec<usize> = self.first_leaf.iter().map(|&c| vertex_of[c]).collect();
        let keeps_colors = images.iter().enumerate().all(|(v, &w)| self.initial.color(v) == self.initial.color(w));
        (keeps_colors && self.g.is_automorphism(&images)).then(|| Permutation::from_images(images).unwrap())
    }

    /// Searches the subtree below `node` at `level` for a leaf equivalent to
    /// the first leaf.
    fn find_leaf(&self, node: &Coloring, level: usize) -> Option<Permutation> {
        if node.is_discrete() {
            return self.leaf_automorphism(node);
        }
        for u in node.target_cell() {
            let (child, trace) = self.child(node, u);
            if trace != self.traces[level + 1] {
                continue;
            }
            if let Some(p) = self.find_leaf(&child, level + 1) {
                return Some(p);
            }
        }
        None
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn merge_orbits(parent: &mut [usize], p: &Permutation) {
    for x in 0..parent.len() {
        let (a, b) = (find(parent, x), find(parent, p.apply(x)));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
}

/// Generators of the colour-preserving automorphism group, using
/// [`vertex_limit`].
pub fn automorphism_group(g: &Graph, c: &Coloring) -> Result<PermGroup> {
    automorphism_group_with_limit(g, c, vertex_limit())
}

pub fn automorphism_group_with_limit(g: &Graph, c: &Coloring, limit: usize) -> Result<PermGroup> {
    let n = g.n();
    if n > limit {
        return Err(Error::LimitExceeded { n, limit });
    }
    if c.len() != n {
        return Err(Error::DegreeMismatch { expected: n, got: c.len() });
    }
    if n == 0 {
        return Ok(PermGroup::trivial(0));
    }
    let (root, root_trace) = refine_traced(g, c);
    let mut path = vec![root];
    let mut traces = vec![root_trace];
    let mut choices = Vec::new();
    while !path.last().unwrap().is_discrete() {
        let node = path.last().unwrap();
        let v = node.target_cell()[0];
        let (child, trace) = refine_traced(g, &node.individualize(v));
        choices.push(v);
        path.push(child);
        traces.push(trace);
    }
    let search = Search { g, initial: c, traces, first_leaf: path.last().unwrap().colors.clone() };
    let mut gens: Vec<Permutation> = Vec::new();
    for level in (0..choices.len()).rev() {
        let node = &path[level];
        let v = choices[level];
        let mut parent: Vec<usize> = (0..n).collect();
        for p in &gens {
            merge_orbits(&mut parent, p);
        }
        let mut failed: Vec<usize> = Vec::new();
        for w in node.target_cell() {
            let rw = find(&mut parent, w);
            if rw == find(&mut parent, v) || failed.iter().any(|&f| find(&mut parent, f) == rw) {
                continue;
            }
            let (child, trace) = search.child(node, w);
            let found = if trace == search.traces[level + 1] { search.find_leaf(&child, level + 1) } else { None };
            match found {
                Some(p) => {
                    merge_orbits(&mut parent, &p);
                    gens.push(p);
                }
                None => failed.push(w),
            }
        }
    }
    PermGroup::new(n, gens)
}

fn components(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        let comp: Vec<usize> = bfs_distances(g, s)
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d != UNREACHABLE)
            .map(|(v, _)| v)
            .collect();
        for &v in &comp {
            seen[v] = true;
        }
        out.push(comp);
    }
    out
}

fn degree_profile(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    d.sort_unstable();
    d
}

/// Isomorphism between connected graphs via the automorphism group of their
/// disjoint union: they are isomorphic iff some automorphism moves vertex 0
/// into the second copy.
fn connected_isomorphism(g1: &Graph, g2: &Graph, limit: usize) -> Result<Option<Vec<usize>>> {
    let n = g1.n();
    if n != g2.n() || g1.m() != g2.m() || degree_profile(g1) != degree_profile(g2) {
        return Ok(None);
    }
    let edges = g1.edges().into_iter().chain(g2.edges().into_iter().map(|(u, v)| (u + n, v + n)));
    let union = Graph::from_edges(2 * n, edges)?;
    let aut = automorphism_group_with_limit(&union, &Coloring::unit(2 * n), limit.max(2 * n))?;
    // Schreier tree from vertex 0
    let mut word: Vec<Option<Permutation>> = vec![None; 2 * n];
    word[0] = Some(Permutation::identity(2 * n));
    let mut queue = std::collections::VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        let wx = word[x].clone().unwrap();
        if x >= n {
            let map: Vec<usize> = (0..n).map(|v| wx.apply(v) - n).collect();
            return Ok(Some(map));
        }
        for p in aut.generators() {
            let y = p.apply(x);
            if word[y].is_none() {
                word[y] = Some(wx.then(p));
                queue.push_back(y);
            }
        }
    }
    Ok(None)
}

/// A vertex bijection `map` with `u ~ v` in `g1` iff `map[u] ~ map[v]` in
/// `g2`, or `None` when the graphs are not isomorphic.
pub fn isomorphism(g1: &Graph, g2: &Graph) -> Result<Option<Vec<usize>>> {
    let limit = vertex_limit();
    for g in [g1, g2] {
        if g.n() > limit {
            return Err(Error::LimitExceeded { n: g.n(), limit });
        }
    }
    if g1.n() != g2.n() || g1.m() != g2.m() {
        return Ok(None);
    }
    let (c1, c2) = (components(g1), components(g2));
    if c1.len() != c2.len() {
        return Ok(None);
    }
    let mut map = vec![0; g1.n()];
    let mut used = vec![false; c2.len()];
    for a in &c1 {
        let ga = g1.induced(a);
        let mut matched = false;
        for (j, b) in c2.iter().enumerate() {
            if used[j] || a.len() != b.len() {
                continue;
            }
            if let Some(m) = connected_isomorphism(&ga, &g2.induced(b), limit)? {
                for (i, &v) in a.iter().enumerate() {
                    map[v] = b[m[i]];
                }
                used[j] = true;
                matched = true;
                break;
            }
        }
        if !matched {
            return Ok(None);
        }
    }
    let ok = g1.edges().iter().all(|&(u, v)| g2.has_edge(map[u], map[v]));
    Ok(ok.then_some(map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{complete_bipartite, cycle, hoffman_singleton, incidence_pg2, incidence_w3, petersen};
    use crate::graph::subdivision;

    fn order(g: &Graph) -> u64 {
        automorphism_group(g, &Coloring::unit(g.n())).unwrap().order_u64()
    }

    #[test]
    fn refine_splits_subdivision_by_degree() {
        let (s, _) = subdivision(&petersen());
        let r = refine(&s, &Coloring::unit(s.n()));
        let sizes: Vec<usize> = r.cells().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![15, 10]);
        assert_eq!(refine(&s, &r), r);
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(refine(&p3, &Coloring::unit(3)).cells(), vec![vec![0, 2], vec![1]]);
        let reg = refine(&petersen(), &Coloring::unit(10));
        assert_eq!(reg.cell_count(), 1);
    }

    #[test]
    fn classic_orders() {
        assert_eq!(order(&petersen()), 120);
        assert_eq!(order(&incidence_pg2(2).unwrap().graph), 336);
        assert_eq!(order(&incidence_w3(2).unwrap().graph), 1440);
        assert_eq!(order(&complete_bipartite(3, 3).unwrap()), 72);
        assert_eq!(order(&cycle(7).unwrap()), 14);
    }

    #[test]
    fn hoffman_singleton_order() {
        assert_eq!(order(&hoffman_singleton()), 252_000);
    }

    #[test]
    fn colouring_is_respected() {
        let c6 = cycle(6).unwrap();
        let c = Coloring::from_colors(&[1, 0, 0, 0, 0, 0]);
        let g = automorphism_group(&c6, &c).unwrap();
        assert_eq!(g.order_u64(), 2);
        assert!(g.generators().iter().all(|p| p.apply(0) == 0));
    }

    #[test]
    fn limit_is_enforced() {
        let g = cycle(10).unwrap();
        assert!(matches!(
            automorphism_group_with_limit(&g, &Coloring::unit(10), 9),
            Err(Error::LimitExceeded { n: 10, limit: 9 })
        ));
    }

    #[test]
    fn isomorphisms() {
        let c6 = cycle(6).unwrap();
        let relabel = [3, 5, 0, 2, 4, 1];
        let shuffled = Graph::from_edges(6, c6.edges().iter().map(|&(u, v)| (relabel[u], relabel[v]))).unwrap();
        let map = isomorphism(&c6, &shuffled).unwrap().unwrap();
        assert!(c6.edges().iter().all(|&(u, v)| shuffled.has_edge(map[u], map[v])));
        let two_triangles = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(isomorphism(&c6, &two_triangles).unwrap(), None);
    }
}
