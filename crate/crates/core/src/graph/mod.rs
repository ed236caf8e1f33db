//! Simple undirected graphs with sorted adjacency lists.
//!
//! Vertices are dense indices `0..n`. Every traversal in this crate iterates
//! neighbours in ascending order, so all derived results are reproducible.

mod analysis;
mod derived;
pub mod io;
mod metrics;

use std::fmt;

pub use analysis::{analyze, moore_bound, AnalysisReport};
pub use derived::{distance2_components, line_graph, lift_to_subdivision, subdivision, Distance2Split, SubdivisionMap};
pub use metrics::{bfs_distances, bipartition, diameter, eccentricity, girth, is_connected, sphere, UNREACHABLE};

use crate::error::{Error, Result};

/// Provenance tag carried by a vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Label {
    /// Vertex of the original graph in a subdivision.
    Original(usize),
    /// Midpoint of the edge `{u, v}`, `u < v`.
    EdgeVertex(usize, usize),
    /// Projective point, given by normalized field-element indices.
    Point(Vec<usize>),
    /// Line of a geometry, given by its coordinates or its sorted point set.
    Line(Vec<usize>),
    /// Unordered pair of points of a projective line (a chamber).
    Pair(usize, usize),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn join(v: &[usize]) -> String {
            v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        }
        match self {
            Label::Original(i) => write!(f, "v{i}"),
            Label::EdgeVertex(u, v) => write!(f, "e({u},{v})"),
            Label::Point(c) => write!(f, "P({})", join(c)),
            Label::Line(c) => write!(f, "L({})", join(c)),
            Label::Pair(a, b) => write!(f, "{{{a},{b}}}"),
        }
    }
}

/// A simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<Label>>,
}

impl Graph {
    /// Builds a graph from an edge iterator. Self-loops are rejected and
    /// repeated edges are collapsed.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::Parse(format!("self-loop at {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj, labels: None })
    }

    pub fn with_labels(mut self, labels: Vec<Label>) -> Self {
        assert_eq!(labels.len(), self.n(), "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn labels(&self) -> Option<&[Label]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&Label> {
        self.labels.as_ref().map(|l| &l[v])
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// `(min, max)` vertex degree; `(0, 0)` for the empty graph.
    pub fn valency(&self) -> (usize, usize) {
        let min = self.adj.iter().map(Vec::len).min().unwrap_or(0);
        let max = self.adj.iter().map(Vec::len).max().unwrap_or(0);
        (min, max)
    }

    /// Common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let (lo, hi) = self.valency();
        (lo == hi).then_some(lo)
    }

    /// Subgraph induced on `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut list: Vec<usize> = self.adj[v]
                    .iter()
                    .filter(|&&w| index[w] != usize::MAX).map(|&w| index[w])
                    .collect();
                list.sort_unstable();
                list
            })
            .collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| vertices.iter().map(|&v| l[v].clone()).collect());
        Graph { adj, labels }
    }

    /// Graph on the same vertices joining pairs at distance exactly `k`.
    pub fn distance_graph(&self, k: usize) -> Graph {
        let adj = (0..self.n())
            .map(|v| {
                bfs_distances(self, v)
                    .iter()
                    .enumerate()
                    .filter_map(|(w, &d)| (d == k).then_some(w))
                    .collect()
            })
            .collect();
        Graph { adj, labels: self.labels.clone() }
    }

    /// True when `images` (a bijection on vertices) preserves adjacency.
    pub fn is_automorphism(&self, images: &[usize]) -> bool {
        if images.len() != self.n() {
            return false;
        }
        self.adj.iter().enumerate().all(|(u, list)| {
            list.len() == self.adj[images[u]].len()
                && list.iter().all(|&v| self.has_edge(images[u], images[v]))
        })
    }
}
