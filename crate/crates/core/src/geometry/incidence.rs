//! Incidence graphs of the classical generalized polygons: the Desarguesian
//! plane PG(2,q), the symplectic quadrangle W(3,q) and the split Cayley
//! hexagon H(q).
//!
//! Points are normalized homogeneous vectors (first nonzero coordinate 1)
//! numbered in lexicographic order of their field-element indices. Points
//! come first in the vertex numbering, lines after.

use std::collections::{BTreeSet, HashMap, HashSet};

use super::field::GField;
use crate::error::{Error, Result};
use crate::graph::{Graph, Label};

/// A point of a projective space, in normalized coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint(Vec<usize>);

impl ProjPoint {
    /// Scales `v` so its first nonzero coordinate is 1; `None` for the zero vector.
    pub fn normalize(field: &GField, v: &[usize]) -> Option<Self> {
        let lead = *v.iter().find(|&&c| c != 0)?;
        let s = field.inv(lead).unwrap();
        Some(ProjPoint(v.iter().map(|&c| field.mul(c, s)).collect()))
    }

    pub fn coords(&self) -> &[usize] {
        &self.0
    }
}

/// All points of PG(dim-1, q), lexicographically ordered.
pub fn projective_points(field: &GField, dim: usize) -> Vec<ProjPoint> {
    let q = field.order();
    let total = q.pow(dim as u32);
    let mut out = Vec::new();
    for mut code in 0..total {
        let mut v = vec![0; dim];
        for c in v.iter_mut().rev() {
            *c = code % q;
            code /= q;
        }
        if let Some(&lead) = v.iter().find(|&&c| c != 0) {
            if lead == 1 {
                out.push(ProjPoint(v));
            }
        }
    }
    out
}

/// Incidence graph of a rank-2 geometry: vertices `0..points` are points,
/// the rest are lines.
#[derive(Debug, Clone)]
pub struct GeometryGraph {
    pub graph: Graph,
    pub points: usize,
    pub lines: usize,
}

impl GeometryGraph {
    pub fn point_vertices(&self) -> Vec<usize> {
        (0..self.points).collect()
    }

    pub fn line_vertices(&self) -> Vec<usize> {
        (self.points..self.points + self.lines).collect()
    }

    pub fn is_point(&self, v: usize) -> bool {
        v < self.points
    }
}

/// Builds the geometry from the point list and each line's point set.
fn from_point_sets(points: &[ProjPoint], lines: Vec<Vec<usize>>, line_labels: Vec<Label>) -> GeometryGraph {
    let np = points.len();
    let edges = lines
        .iter()
        .enumerate()
        .flat_map(|(j, pts)| pts.iter().map(move |&p| (p, np + j)));
    let labels = points
        .iter()
        .map(|p| Label::Point(p.0.clone()))
        .chain(line_labels)
        .collect();
    let graph = Graph::from_edges(np + lines.len(), edges).unwrap().with_labels(labels);
    GeometryGraph { graph, points: np, lines: lines.len() }
}

fn dot(field: &GField, a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).fold(0, |acc, (&x, &y)| field.add(acc, field.mul(x, y)))
}

/// Points on the line through `x` and `y`, as indices into `index`.
fn span(field: &GField, x: &ProjPoint, y: &ProjPoint, index: &HashMap<ProjPoint, usize>) -> Vec<usize> {
    let mut pts = vec![index[x]];
    for c in 0..field.order() {
        let v: Vec<usize> = x.0.iter().zip(&y.0).map(|(&a, &b)| field.add(b, field.mul(c, a))).collect();
        pts.push(index[&ProjPoint::normalize(field, &v).unwrap()]);
    }
    pts.sort_unstable();
    pts.dedup();
    pts
}

/// Lines through pairs of points accepted by `keep`, each given by its
/// sorted point set, in lexicographic order.
fn collect_lines<F>(field: &GField, points: &[ProjPoint], keep: F) -> Vec<Vec<usize>>
where
    F: Fn(&ProjPoint, &ProjPoint) -> bool,
{
    let index: HashMap<ProjPoint, usize> = points.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let mut lines: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut covered: HashSet<(usize, usize)> = HashSet::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if covered.contains(&(i, j)) || !keep(&points[i], &points[j]) {
                continue;
            }
            let line = span(field, &points[i], &points[j], &index);
            for (a, &u) in line.iter().enumerate() {
                for &v in &line[a + 1..] {
                    covered.insert((u, v));
                }
            }
            lines.insert(line);
        }
    }
    lines.into_iter().collect()
}

/// Incidence graph of PG(2,q): lines are normalized dual vectors `l`, with
/// `p` on `l` iff `p . l = 0`.
pub fn incidence_pg2(q: usize) -> Result<GeometryGraph> {
    let field = GField::new(q)?;
    let points = projective_points(&field, 3);
    let lines: Vec<Vec<usize>> = points
        .iter()
        .map(|l| (0..points.len()).filter(|&p| dot(&field, &points[p].0, &l.0) == 0).collect())
        .collect();
    let labels = points.iter().map(|l| Label::Line(l.0.clone())).collect();
    Ok(from_point_sets(&points, lines, labels))
}

/// Alternating form `x1 y2 - x2 y1 + x3 y4 - x4 y3` (1-indexed coordinates).
fn symplectic(field: &GField, x: &[usize], y: &[usize]) -> usize {
    let t = |i: usize, j: usize| field.sub(field.mul(x[i], y[j]), field.mul(x[j], y[i]));
    field.add(t(0, 1), t(2, 3))
}

/// Incidence graph of W(3,q): all points of PG(3,q) and the totally
/// isotropic lines of the symplectic form.
pub fn incidence_w3(q: usize) -> Result<GeometryGraph> {
    let field = GField::new(q)?;
    let points = projective_points(&field, 4);
    let lines = collect_lines(&field, &points, |x, y| symplectic(&field, &x.0, &y.0) == 0);
    let labels = lines.iter().map(|l| Label::Line(l.clone())).collect();
    Ok(from_point_sets(&points, lines, labels))
}

/// Quadratic form `x0 x4 + x1 x5 + x2 x6 - x3^2` of Q(6,q).
fn quadric(field: &GField, x: &[usize]) -> usize {
    let s = field.add(field.add(field.mul(x[0], x[4]), field.mul(x[1], x[5])), field.mul(x[2], x[6]));
    field.sub(s, field.mul(x[3], x[3]))
}

/// Whether the line through `x` and `y` (both on Q(6,q)) is a hexagon line:
/// it lies on the quadric and its Grassmann coordinates satisfy
/// p12 = p34, p54 = p32, p20 = p35, p65 = p30, p01 = p36, p46 = p31.
fn hexagon_line(field: &GField, x: &[usize], y: &[usize]) -> bool {
    let sum: Vec<usize> = x.iter().zip(y).map(|(&a, &b)| field.add(a, b)).collect();
    // polar form B(x,y) = Q(x+y) - Q(x) - Q(y), with Q(x) = Q(y) = 0
    if quadric(field, &sum) != 0 {
        return false;
    }
    let p = |i: usize, j: usize| field.sub(field.mul(x[i], y[j]), field.mul(x[j], y[i]));
    p(1, 2) == p(3, 4)
        && p(5, 4) == p(3, 2)
        && p(2, 0) == p(3, 5)
        && p(6, 5) == p(3, 0)
        && p(0, 1) == p(3, 6)
        && p(4, 6) == p(3, 1)
}

/// Incidence graph of the split Cayley hexagon H(q) in its Q(6,q) model.
pub fn incidence_hexagon(q: usize) -> Result<GeometryGraph> {
    if !matches!(q, 2 | 3) {
        return Err(Error::Unsupported(format!("hexagon only for q in {{2, 3}}, got {q}")));
    }
    let field = GField::new(q)?;
    let points: Vec<ProjPoint> =
        projective_points(&field, 7).into_iter().filter(|p| quadric(&field, &p.0) == 0).collect();
    let lines = collect_lines(&field, &points, |x, y| hexagon_line(&field, &x.0, &y.0));
    let labels = lines.iter().map(|l| Label::Line(l.clone())).collect();
    Ok(from_point_sets(&points, lines, labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{diameter, girth};

    #[test]
    fn point_counts() {
        let f = GField::new(3).unwrap();
        assert_eq!(projective_points(&f, 3).len(), 13);
        assert_eq!(projective_points(&f, 4).len(), 40);
        let pts = projective_points(&f, 3);
        assert_eq!(pts[0].coords(), &[0, 0, 1]);
        assert!(pts.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn heawood() {
        let g = incidence_pg2(2).unwrap();
        assert_eq!(g.graph.n(), 14);
        assert_eq!(g.graph.m(), 21);
        assert_eq!(g.graph.regular_degree(), Some(3));
        assert_eq!(girth(&g.graph), Some(6));
        assert_eq!(diameter(&g.graph).unwrap(), 3);
    }

    #[test]
    fn tutte_coxeter() {
        let g = incidence_w3(2).unwrap();
        assert_eq!((g.points, g.lines), (15, 15));
        assert_eq!(g.graph.regular_degree(), Some(3));
        assert_eq!(girth(&g.graph), Some(8));
        assert_eq!(diameter(&g.graph).unwrap(), 4);
    }

    #[test]
    fn hexagon_of_order_two() {
        let g = incidence_hexagon(2).unwrap();
        assert_eq!((g.points, g.lines), (63, 63));
        assert_eq!(g.graph.regular_degree(), Some(3));
        assert_eq!(girth(&g.graph), Some(12));
        assert_eq!(diameter(&g.graph).unwrap(), 6);
        assert!(incidence_hexagon(4).is_err());
    }

    #[test]
    fn unsupported_q() {
        assert!(incidence_pg2(6).is_err());
        assert!(incidence_w3(10).is_err());
    }
}
