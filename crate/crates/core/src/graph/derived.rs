use super::{bipartition, is_connected, Graph, Label};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Index layout of a subdivision: original vertices occupy `0..n`, the
/// midpoint of the `j`-th edge (lexicographic order) is `n + j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdivisionMap {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl SubdivisionMap {
    pub fn original_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn original_vertex(&self, i: usize) -> usize {
        assert!(i < self.n);
        i
    }

    /// Index of the midpoint of `{u, v}`, if that edge exists.
    pub fn edge_vertex(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok().map(|j| self.n + j)
    }

    /// The edge whose midpoint is `x`, if `x` is an edge-vertex.
    pub fn edge_of(&self, x: usize) -> Option<(usize, usize)> {
        x.checked_sub(self.n).and_then(|j| self.edges.get(j).copied())
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

/// The subdivision graph: every edge of `g` gets a midpoint.
pub fn subdivision(g: &Graph) -> (Graph, SubdivisionMap) {
    let n = g.n();
    let edges = g.edges();
    let mut sub_edges = Vec::with_capacity(2 * edges.len());
    for (j, &(u, v)) in edges.iter().enumerate() {
        sub_edges.push((u, n + j));
        sub_edges.push((v, n + j));
    }
    let labels = (0..n)
        .map(Label::Original)
        .chain(edges.iter().map(|&(u, v)| Label::EdgeVertex(u, v)))
        .collect();
    let s = Graph::from_edges(n + edges.len(), sub_edges)
        .expect("subdivision edges are in range")
        .with_labels(labels);
    (s, SubdivisionMap { n, edges })
}

/// Line graph; vertex `j` is the `j`-th edge of `g` in lexicographic order.
pub fn line_graph(g: &Graph) -> Graph {
    let edges = g.edges();
    let index = |u: usize, v: usize| {
        let key = if u < v { (u, v) } else { (v, u) };
        edges.binary_search(&key).unwrap()
    };
    let mut out = Vec::new();
    for x in 0..g.n() {
        let inc: Vec<usize> = g.neighbors(x).iter().map(|&y| index(x, y)).collect();
        for a in 0..inc.len() {
            for b in a + 1..inc.len() {
                out.push((inc[a], inc[b]));
            }
        }
    }
    let labels = edges.iter().map(|&(u, v)| Label::EdgeVertex(u, v)).collect();
    Graph::from_edges(edges.len(), out)
        .expect("line graph edges are in range")
        .with_labels(labels)
}

/// The two components of the distance-2 graph of a connected bipartite graph.
#[derive(Debug, Clone)]
pub struct Distance2Split {
    /// Component containing vertex 0.
    pub first: Graph,
    /// Original indices of `first`'s vertices, ascending.
    pub first_vertices: Vec<usize>,
    pub second: Graph,
    pub second_vertices: Vec<usize>,
}

/// Splits the distance-2 graph of a connected bipartite graph into its two
/// components. For a subdivision these are the original graph and its line
/// graph, with vertices in the same order as [`subdivision`] lays them out.
pub fn distance2_components(g: &Graph) -> Result<Distance2Split> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let sides = bipartition(g).ok_or(Error::NotBipartite)?;
    let first_vertices: Vec<usize> = (0..g.n()).filter(|&v| !sides[v]).collect();
    let second_vertices: Vec<usize> = (0..g.n()).filter(|&v| sides[v]).collect();
    let d2 = g.distance_graph(2);
    Ok(Distance2Split {
        first: d2.induced(&first_vertices),
        first_vertices,
        second: d2.induced(&second_vertices),
        second_vertices,
    })
}

/// Extends an automorphism of `g` to its subdivision.
pub fn lift_to_subdivision(p: &Permutation, g: &Graph, map: &SubdivisionMap) -> Result<Permutation> {
    if p.degree() != g.n() || map.original_count() != g.n() {
        return Err(Error::DegreeMismatch { expected: g.n(), got: p.degree() });
    }
    let n = g.n();
    let mut images = Vec::with_capacity(n + map.edge_count());
    images.extend((0..n).map(|i| p.apply(i)));
    for &(u, v) in map.edges() {
        let (pu, pv) = (p.apply(u), p.apply(v));
        let e = map.edge_vertex(pu, pv).ok_or_else(|| {
            Error::NotAutomorphism(format!("edge ({u},{v}) maps to non-edge ({pu},{pv})"))
        })?;
        images.push(e);
    }
    Permutation::from_images(images)
}
