use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Unsupported("complete graph needs n >= 1".into()));
    }
    Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::Unsupported("complete bipartite graph needs a, b >= 1".into()));
    }
    Graph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Unsupported(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Kneser graph on the 2-subsets of a 5-set (lexicographic order), adjacent
/// when disjoint.
pub fn petersen() -> Graph {
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    let mut edges = Vec::new();
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for (j, &(c, d)) in pairs.iter().enumerate().skip(i + 1) {
            if a != c && a != d && b != c && b != d {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(10, edges).unwrap()
}

/// Robertson's construction: pentagons `P_h` (vertex `5h + j`), pentagrams
/// `Q_i` (vertex `25 + 5i + j`), and `P_h(j) ~ Q_i(h*i + j mod 5)`.
pub fn hoffman_singleton() -> Graph {
    let p = |h: usize, j: usize| 5 * h + j % 5;
    let q = |i: usize, j: usize| 25 + 5 * i + j % 5;
    let mut edges = Vec::new();
    for h in 0..5 {
        for j in 0..5 {
            edges.push((p(h, j), p(h, j + 1)));
            edges.push((q(h, j), q(h, j + 2)));
            for i in 0..5 {
                edges.push((p(h, j), q(i, h * i + j)));
            }
        }
    }
    Graph::from_edges(50, edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{diameter, girth};

    #[test]
    fn petersen_invariants() {
        let g = petersen();
        assert_eq!(g.n(), 10);
        assert_eq!(g.regular_degree(), Some(3));
        assert_eq!(girth(&g), Some(5));
        assert_eq!(diameter(&g).unwrap(), 2);
    }

    #[test]
    fn hoffman_singleton_invariants() {
        let g = hoffman_singleton();
        assert_eq!(g.n(), 50);
        assert_eq!(g.regular_degree(), Some(7));
        assert_eq!(girth(&g), Some(5));
        assert_eq!(diameter(&g).unwrap(), 2);
    }

    #[test]
    fn small_families() {
        let k33 = complete_bipartite(3, 3).unwrap();
        assert_eq!((girth(&k33), diameter(&k33).unwrap()), (Some(4), 2));
        let c7 = cycle(7).unwrap();
        assert_eq!((girth(&c7), diameter(&c7).unwrap()), (Some(7), 3));
        assert_eq!(complete(5).unwrap().m(), 10);
        assert!(cycle(2).is_err());
        assert!(complete_bipartite(0, 3).is_err());
    }
}
