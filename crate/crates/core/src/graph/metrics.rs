use std::collections::VecDeque;

use super::Graph;
use crate::error::{Error, Result};

/// Distance recorded for vertices not reachable from the source.
pub const UNREACHABLE: usize = usize::MAX;

/// Hop distances from `src`; unreachable vertices get [`UNREACHABLE`].
pub fn bfs_distances(g: &Graph, src: usize) -> Vec<usize> {
    let mut dist = vec![UNREACHABLE; g.n()];
    let mut queue = VecDeque::new();
    dist[src] = 0;
    queue.push_back(src);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == UNREACHABLE {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn is_connected(g: &Graph) -> bool {
    g.n() == 0 || bfs_distances(g, 0).iter().all(|&d| d != UNREACHABLE)
}

/// Largest distance from `x`, or an error if some vertex is unreachable.
pub fn eccentricity(g: &Graph, x: usize) -> Result<usize> {
    let dist = bfs_distances(g, x);
    if dist.contains(&UNREACHABLE) {
        return Err(Error::Disconnected);
    }
    Ok(dist.into_iter().max().unwrap_or(0))
}

pub fn diameter(g: &Graph) -> Result<usize> {
    let mut best = 0;
    for x in 0..g.n() {
        best = best.max(eccentricity(g, x)?);
    }
    Ok(best)
}

/// Length of a shortest cycle, `None` for forests.
///
/// Runs a BFS from every vertex; a non-tree edge `{u, w}` met from source `s`
/// closes a walk of length `d(u) + d(w) + 1`, which bounds the girth from above
/// and equals it for the best source. Each BFS stops once no shorter cycle can
/// be found.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![UNREACHABLE; n];
    let mut parent = vec![usize::MAX; n];
    let mut touched = Vec::new();
    let mut queue = VecDeque::new();
    for s in 0..n {
        for &v in &touched {
            dist[v] = UNREACHABLE;
            parent[v] = usize::MAX;
        }
        touched.clear();
        queue.clear();
        dist[s] = 0;
        touched.push(s);
        queue.push_back(s);
        'bfs: while let Some(u) = queue.pop_front() {
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == UNREACHABLE {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    touched.push(w);
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                    if 2 * dist[u] + 1 >= best {
                        break 'bfs;
                    }
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

/// Vertices at distance exactly `i` from `x`, ascending.
pub fn sphere(g: &Graph, x: usize, i: usize) -> Result<Vec<usize>> {
    if x >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: x, n: g.n() });
    }
    Ok(bfs_distances(g, x)
        .iter()
        .enumerate()
        .filter_map(|(v, &d)| (d == i).then_some(v))
        .collect())
}

/// Two-colouring of a bipartite graph (`false` on the side of the smallest
/// vertex of each component), or `None` if an odd cycle exists.
pub fn bipartition(g: &Graph) -> Option<Vec<bool>> {
    let n = g.n();
    let mut side: Vec<Option<bool>> = vec![None; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let su = side[u].unwrap();
            for &w in g.neighbors(u) {
                match side[w] {
                    None => {
                        side[w] = Some(!su);
                        queue.push_back(w);
                    }
                    Some(sw) if sw == su => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(side.into_iter().map(Option::unwrap).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn bfs_on_hexagon() {
        assert_eq!(bfs_distances(&cycle(6), 0), vec![0, 1, 2, 3, 2, 1]);
    }

    #[test]
    fn k4_minus_edge() {
        // 0 and 1 are the non-adjacent degree-2 vertices
        let g = Graph::from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(g.degree(0), 2);
        assert_eq!(*bfs_distances(&g, 0).iter().max().unwrap(), 2);
        assert_eq!(girth(&g), Some(3));
    }

    #[test]
    fn unreachable_is_not_zero() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(bfs_distances(&g, 0)[2], UNREACHABLE);
        assert!(matches!(diameter(&g), Err(Error::Disconnected)));
    }

    #[test]
    fn forest_has_no_girth() {
        let tree = Graph::from_edges(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        assert_eq!(girth(&tree), None);
        assert_eq!(girth(&cycle(7)), Some(7));
    }

    #[test]
    fn sphere_zero_is_the_vertex() {
        let g = cycle(5);
        assert_eq!(sphere(&g, 3, 0).unwrap(), vec![3]);
        assert_eq!(sphere(&g, 0, 2).unwrap(), vec![2, 3]);
        assert!(sphere(&g, 9, 0).is_err());
    }

    #[test]
    fn odd_cycle_not_bipartite() {
        assert!(bipartition(&cycle(5)).is_none());
        let sides = bipartition(&cycle(6)).unwrap();
        assert_eq!(sides, vec![false, true, false, true, false, true]);
    }
}
