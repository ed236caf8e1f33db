//! The projective line PG(1,9), the groups between PSL(2,9) and PΓL(2,9)
//! acting on it, and the chamber model of W(3,2): chambers are the 45
//! unordered pairs of points, and two chambers are opposite when the pairs
//! are disjoint and their cross-ratio is a non-square.

use super::field::GField;
use crate::graph::{Graph, Label};
use crate::perm::{PermGroup, Permutation};

/// Point index of infinity on PG(1,9); finite points are field indices.
pub const INFINITY: usize = 9;

/// Subgroups of PΓL(2,9) on the 10 points of PG(1,9).
#[derive(Debug, Clone)]
pub struct MobiusGroups {
    /// Index of the primitive element used in the generators.
    pub nu: usize,
    pub psl: PermGroup,
    pub pgl: PermGroup,
    /// PΣL(2,9) = PSL(2,9) extended by the Frobenius map.
    pub psigma_l: PermGroup,
    pub m10: PermGroup,
    pub pgamma_l: PermGroup,
}

/// Named generators on PG(1,9).
pub struct MobiusMaps {
    pub translate: Permutation,
    pub scale_nu2: Permutation,
    pub negative_inverse: Permutation,
    pub scale_nu: Permutation,
    pub frobenius: Permutation,
    pub nu_frobenius: Permutation,
}

fn gf9() -> GField {
    GField::new(9).expect("GF(9) is supported")
}

fn map_on_line(f: impl Fn(usize) -> usize) -> Permutation {
    Permutation::from_images((0..10).map(f).collect()).expect("Möbius maps are bijections")
}

pub fn mobius_maps() -> MobiusMaps {
    let f = gf9();
    let nu = f.primitive();
    let nu2 = f.mul(nu, nu);
    let finite = |g: &dyn Fn(usize) -> usize| map_on_line(|x| if x == INFINITY { INFINITY } else { g(x) });
    MobiusMaps {
        translate: finite(&|x| f.add(x, 1)),
        scale_nu2: finite(&|x| f.mul(nu2, x)),
        negative_inverse: map_on_line(|x| match x {
            INFINITY => 0,
            0 => INFINITY,
            x => f.neg(f.inv(x).unwrap()),
        }),
        scale_nu: finite(&|x| f.mul(nu, x)),
        frobenius: finite(&|x| f.frobenius(x)),
        nu_frobenius: finite(&|x| f.mul(nu, f.frobenius(x))),
    }
}

pub fn mobius_subgroups() -> MobiusGroups {
    let m = mobius_maps();
    let base = vec![m.translate.clone(), m.scale_nu2.clone(), m.negative_inverse.clone()];
    let with = |extra: &[&Permutation]| {
        let mut gens = base.clone();
        gens.extend(extra.iter().map(|&p| p.clone()));
        PermGroup::new(10, gens).unwrap()
    };
    MobiusGroups {
        nu: gf9().primitive(),
        psl: with(&[]),
        pgl: with(&[&m.scale_nu]),
        psigma_l: with(&[&m.frobenius]),
        m10: with(&[&m.nu_frobenius]),
        pgamma_l: with(&[&m.scale_nu, &m.frobenius]),
    }
}

/// `PGL(2,q)` on the `q + 1` points of PG(1,q), with `∞ = q`, generated by
/// `x -> x + 1`, `x -> νx` and `x -> 1/x`; with `frobenius` also `x -> x^p`,
/// giving `PΓL(2,q)`.
pub fn projective_line_group(q: usize, frobenius: bool) -> crate::error::Result<PermGroup> {
    let f = GField::new(q)?;
    let nu = f.primitive();
    let on_line = |g: &dyn Fn(usize) -> usize| -> Permutation {
        Permutation::from_images((0..=q).map(|x| if x == q { q } else { g(x) }).collect()).unwrap()
    };
    let mut gens = vec![
        on_line(&|x| f.add(x, 1)),
        on_line(&|x| f.mul(nu, x)),
        Permutation::from_images(
            (0..=q)
                .map(|x| match x {
                    0 => q,
                    x if x == q => 0,
                    x => f.inv(x).unwrap(),
                })
                .collect(),
        )
        .unwrap(),
    ];
    if frobenius {
        gens.push(on_line(&|x| f.frobenius(x)));
    }
    PermGroup::new(q + 1, gens)
}

fn homogeneous(x: usize) -> (usize, usize) {
    if x == INFINITY { (1, 0) } else { (x, 1) }
}

fn det(f: &GField, u: usize, v: usize) -> usize {
    let (u0, u1) = homogeneous(u);
    let (v0, v1) = homogeneous(v);
    f.sub(f.mul(u0, v1), f.mul(u1, v0))
}

/// Cross-ratio `((a-c)(b-d)) / ((a-d)(b-c))` of four distinct points,
/// evaluated on homogeneous coordinates `(x:1)`, `∞ = (1:0)`, where each
/// difference `u - v` becomes the determinant `u0 v1 - u1 v0`. This agrees
/// with the limit rules: a factor involving `∞` appears once upstairs and
/// once downstairs and their ratio tends to 1, e.g.
/// `(∞,b;c,d) = (b-d)/(b-c)` and `(a,b;c,∞) = (a-c)/(b-c)`.
pub fn cross_ratio(f: &GField, a: usize, b: usize, c: usize, d: usize) -> usize {
    let num = f.mul(det(f, a, c), det(f, b, d));
    let den = f.mul(det(f, a, d), det(f, b, c));
    f.mul(num, f.inv(den).expect("points are distinct"))
}

/// The 45 chambers with the opposition relation, and the groups acting on them.
#[derive(Debug, Clone)]
pub struct ChamberModel {
    /// Chamber `i` is the pair `pairs[i]`, `a < b`, lexicographic.
    pub pairs: Vec<(usize, usize)>,
    pub opposition: Graph,
    pub groups: MobiusGroups,
    pub psl: PermGroup,
    pub pgl: PermGroup,
    pub psigma_l: PermGroup,
    pub m10: PermGroup,
    pub pgamma_l: PermGroup,
}

impl ChamberModel {
    pub fn pair_index(&self, a: usize, b: usize) -> usize {
        let key = if a < b { (a, b) } else { (b, a) };
        self.pairs.binary_search(&key).unwrap()
    }

    /// Permutation of chambers induced by a permutation of PG(1,9).
    pub fn induced(&self, p: &Permutation) -> Permutation {
        let images = self.pairs.iter().map(|&(a, b)| self.pair_index(p.apply(a), p.apply(b))).collect();
        Permutation::from_images(images).unwrap()
    }

    fn induced_group(&self, g: &PermGroup) -> PermGroup {
        PermGroup::new(self.pairs.len(), g.generators().iter().map(|p| self.induced(p)).collect()).unwrap()
    }
}

pub fn opposite(f: &GField, (a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    let disjoint = a != c && a != d && b != c && b != d;
    disjoint && !f.is_square(cross_ratio(f, a, b, c, d))
}

pub fn chamber_model_w32() -> ChamberModel {
    let f = gf9();
    let pairs: Vec<(usize, usize)> = (0..10).flat_map(|a| (a + 1..10).map(move |b| (a, b))).collect();
    let mut edges = Vec::new();
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            if opposite(&f, pairs[i], pairs[j]) {
                edges.push((i, j));
            }
        }
    }
    let labels = pairs.iter().map(|&(a, b)| Label::Pair(a, b)).collect();
    let opposition = Graph::from_edges(pairs.len(), edges).unwrap().with_labels(labels);
    let groups = mobius_subgroups();
    let mut model = ChamberModel {
        pairs,
        opposition,
        psl: PermGroup::trivial(45),
        pgl: PermGroup::trivial(45),
        psigma_l: PermGroup::trivial(45),
        m10: PermGroup::trivial(45),
        pgamma_l: PermGroup::trivial(45),
        groups,
    };
    model.psl = model.induced_group(&model.groups.psl);
    model.pgl = model.induced_group(&model.groups.pgl);
    model.psigma_l = model.induced_group(&model.groups.psigma_l);
    model.m10 = model.induced_group(&model.groups.m10);
    model.pgamma_l = model.induced_group(&model.groups.pgamma_l);
    model
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        let g = mobius_subgroups();
        assert_eq!(g.nu, 4);
        assert_eq!(g.psl.order_u64(), 360);
        assert_eq!(g.pgl.order_u64(), 720);
        assert_eq!(g.psigma_l.order_u64(), 720);
        assert_eq!(g.m10.order_u64(), 720);
        assert_eq!(g.pgamma_l.order_u64(), 1440);
    }

    #[test]
    fn projective_line_groups() {
        let pgl = projective_line_group(8, false).unwrap();
        let pgaml = projective_line_group(8, true).unwrap();
        assert_eq!((pgl.order_u64(), pgaml.order_u64()), (504, 1512));
        assert!(pgaml.is_k_transitive(3).unwrap());
        assert!(!pgaml.is_k_transitive(4).unwrap());
        assert_eq!(projective_line_group(5, false).unwrap().order_u64(), 120);
        assert_eq!(projective_line_group(9, true).unwrap().order_u64(), 1440);
    }

    #[test]
    fn psl_is_2_but_not_3_transitive() {
        let g = mobius_subgroups();
        assert!(g.psl.is_k_transitive(2).unwrap());
        assert!(!g.psl.is_k_transitive(3).unwrap());
    }

    #[test]
    fn m10_excludes_scaling_and_frobenius() {
        let g = mobius_subgroups();
        let m = mobius_maps();
        assert!(!g.m10.contains(&m.scale_nu).unwrap());
        assert!(!g.m10.contains(&m.frobenius).unwrap());
        assert!(g.m10.contains(&m.nu_frobenius).unwrap());
        // Frobenius lies outside PGL(2,9), so together they give PΓL(2,9)
        assert!(!g.pgl.contains(&m.frobenius).unwrap());
    }

    #[test]
    fn cross_ratio_limit_rules() {
        let f = gf9();
        let (b, c, d) = (1, 2, 5);
        let inf = INFINITY;
        let frac = |x: usize, y: usize| f.mul(x, f.inv(y).unwrap());
        assert_eq!(cross_ratio(&f, inf, b, c, d), frac(f.sub(b, d), f.sub(b, c)));
        assert_eq!(cross_ratio(&f, b, inf, c, d), frac(f.sub(b, c), f.sub(b, d)));
        assert_eq!(cross_ratio(&f, c, d, inf, b), frac(f.sub(d, b), f.sub(c, b)));
        assert_eq!(cross_ratio(&f, c, d, b, inf), frac(f.sub(c, b), f.sub(d, b)));
    }

    #[test]
    fn cross_ratio_is_mobius_invariant() {
        let f = gf9();
        let m = mobius_maps();
        for g in [&m.translate, &m.scale_nu, &m.negative_inverse] {
            for (a, b, c, d) in [(0, 1, 2, 3), (9, 4, 7, 2), (5, 9, 0, 8)] {
                assert_eq!(
                    cross_ratio(&f, a, b, c, d),
                    cross_ratio(&f, g.apply(a), g.apply(b), g.apply(c), g.apply(d))
                );
            }
        }
    }

    #[test]
    fn opposition_is_16_regular() {
        let model = chamber_model_w32();
        assert_eq!(model.opposition.n(), 45);
        assert_eq!(model.opposition.regular_degree(), Some(16));
    }

    #[test]
    fn opposition_preserved_by_all_groups() {
        let model = chamber_model_w32();
        for g in [&model.psl, &model.pgl, &model.psigma_l, &model.m10, &model.pgamma_l] {
            for p in g.generators() {
                assert!(model.opposition.is_automorphism(&p.to_vec()));
            }
        }
    }
}
