//! Transfer of the PG(1,9) chamber-model groups onto the Tutte–Coxeter
//! graph `Inc(W(3,2))`.
//!
//! The opposition graph on the 45 pairs is matched by isomorphism with the
//! distance-8 graph on the edge-vertices of the subdivision. Since the
//! opposition graph has automorphism group of order 1440, equal to that of
//! `Inc(W(3,2))`, every chamber permutation preserving opposition comes from
//! a graph automorphism; its action on a vertex is read off from the three
//! flags through it.

use std::collections::HashMap;

use serde::Serialize;

use crate::autsolve::{automorphism_group, isomorphism, Coloring};
use crate::error::{Error, Result};
use crate::geometry::{chamber_model_w32, incidence_w3, ChamberModel};
use crate::graph::{subdivision, Graph, SubdivisionMap};
use crate::perm::{PermGroup, Permutation};

/// Named subgroups of `PΓL(2,9)` in the chamber model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum MobiusRecipe {
    Psl,
    Pgl,
    PSigmaL,
    M10,
    PGammaL,
}

impl MobiusRecipe {
    pub const ALL: [MobiusRecipe; 5] =
        [MobiusRecipe::Psl, MobiusRecipe::Pgl, MobiusRecipe::PSigmaL, MobiusRecipe::M10, MobiusRecipe::PGammaL];

    pub fn name(self) -> &'static str {
        match self {
            MobiusRecipe::Psl => "PSL(2,9)",
            MobiusRecipe::Pgl => "PGL(2,9)",
            MobiusRecipe::PSigmaL => "PSigmaL(2,9)",
            MobiusRecipe::M10 => "M10",
            MobiusRecipe::PGammaL => "PGammaL(2,9)",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "psl" | "psl29" => Some(MobiusRecipe::Psl),
            "pgl" | "pgl29" => Some(MobiusRecipe::Pgl),
            "psigmal" | "psigmal29" | "s6" => Some(MobiusRecipe::PSigmaL),
            "m10" => Some(MobiusRecipe::M10),
            "pgammal" | "pgammal29" => Some(MobiusRecipe::PGammaL),
            _ => None,
        }
    }

    fn in_model(self, model: &ChamberModel) -> &PermGroup {
        match self {
            MobiusRecipe::Psl => &model.psl,
            MobiusRecipe::Pgl => &model.pgl,
            MobiusRecipe::PSigmaL => &model.psigma_l,
            MobiusRecipe::M10 => &model.m10,
            MobiusRecipe::PGammaL => &model.pgamma_l,
        }
    }
}

/// The chamber model matched with `Inc(W(3,2))`.
#[derive(Debug, Clone)]
pub struct ChamberTransfer {
    pub model: ChamberModel,
    pub sigma: Graph,
    pub subdivision: Graph,
    pub map: SubdivisionMap,
    /// Chamber `i` corresponds to edge `chamber_to_edge[i]` of `sigma`.
    pub chamber_to_edge: Vec<usize>,
    pub opposition_aut_order: u64,
}

impl ChamberTransfer {
    pub fn new() -> Result<Self> {
        let model = chamber_model_w32();
        let sigma = incidence_w3(2)?.graph;
        let (subdivision, map) = subdivision(&sigma);
        let n = sigma.n();
        let edge_vertices: Vec<usize> = (n..subdivision.n()).collect();
        let far = subdivision.distance_graph(8).induced(&edge_vertices);
        let chamber_to_edge = isomorphism(&model.opposition, &far)?
            .ok_or_else(|| Error::Unsupported("opposition graph does not match the distance-8 graph".into()))?;
        let opposition_aut_order =
            automorphism_group(&model.opposition, &Coloring::unit(model.opposition.n()))?.order_u64();
        if opposition_aut_order != 1440 {
            return Err(Error::Unsupported(format!(
                "opposition graph has automorphism group of order {opposition_aut_order}, expected 1440"
            )));
        }
        Ok(ChamberTransfer { model, sigma, subdivision, map, chamber_to_edge, opposition_aut_order })
    }

    /// Permutation of `sigma` inducing the chamber permutation `p`.
    pub fn vertex_action(&self, p: &Permutation) -> Result<Permutation> {
        let m = self.chamber_to_edge.len();
        let mut edge_perm = vec![0; m];
        for (i, &e) in self.chamber_to_edge.iter().enumerate() {
            edge_perm[e] = self.chamber_to_edge[p.apply(i)];
        }
        let n = self.sigma.n();
        let mut flags: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (j, &(u, v)) in self.map.edges().iter().enumerate() {
            flags[u].push(j);
            flags[v].push(j);
        }
        let by_flags: HashMap<Vec<usize>, usize> = flags.iter().cloned().enumerate().map(|(v, f)| (f, v)).collect();
        let images = flags
            .iter()
            .map(|f| {
                let mut img: Vec<usize> = f.iter().map(|&j| edge_perm[j]).collect();
                img.sort_unstable();
                by_flags
                    .get(&img)
                    .copied()
                    .ok_or_else(|| Error::NotAutomorphism("chamber permutation does not act on vertices".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        if !self.sigma.is_automorphism(&images) {
            return Err(Error::NotAutomorphism("transferred permutation is not an automorphism".into()));
        }
        Permutation::from_images(images)
    }

    /// The named subgroup acting on the vertices of `Inc(W(3,2))`.
    pub fn group(&self, recipe: MobiusRecipe) -> Result<PermGroup> {
        let gens = recipe
            .in_model(&self.model)
            .generators()
            .iter()
            .map(|p| self.vertex_action(p))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(self.sigma.n(), gens)
    }

    /// The named subgroup acting on the 45 chambers.
    pub fn chamber_group(&self, recipe: MobiusRecipe) -> &PermGroup {
        recipe.in_model(&self.model)
    }
}

/// Pair-stabilizer facts in the chamber model.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChamberFacts {
    pub chambers: usize,
    pub opposition_valency: Option<usize>,
    pub opposition_aut_order: u64,
    pub matches_distance_8: bool,
    pub pgl_stabilizer_order: u64,
    pub pgl_opposite_orbits: Vec<usize>,
    pub psl_stabilizer_order: u64,
    pub psl_opposite_orbits: Vec<usize>,
    pub psl_semiregular: bool,
    pub same_orbits: bool,
    /// `M10` edge-stabilizer orbits on the distance-8 sphere of `S(Inc(W(3,2)))`.
    pub m10_distance_8_orbits: Vec<usize>,
    pub verdict: bool,
}

fn opposite_orbits(model: &ChamberModel, group: &PermGroup) -> Result<(u64, Vec<Vec<usize>>)> {
    let stab = group.stabilizer(0);
    let opposite = model.opposition.neighbors(0).to_vec();
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let mut seen = vec![false; group.degree()];
    for &c in &opposite {
        if !seen[c] {
            let orbit = stab.orbit(c);
            for &x in &orbit {
                seen[x] = true;
            }
            orbits.push(orbit);
        }
    }
    // rejects a stabilizer that does not preserve the opposite chambers
    stab.orbit_sizes_on(&opposite)?;
    orbits.sort_by_key(|o| (o.len(), o.iter().min().copied()));
    Ok((stab.order_u64(), orbits))
}

pub fn chamber_facts(transfer: &ChamberTransfer) -> Result<ChamberFacts> {
    let model = &transfer.model;
    let (pgl_order, pgl_orbits) = opposite_orbits(model, &model.pgl)?;
    let (psl_order, psl_orbits) = opposite_orbits(model, &model.psl)?;
    let sizes = |o: &[Vec<usize>]| o.iter().map(Vec::len).collect::<Vec<_>>();
    let same_orbits = {
        let norm = |o: &[Vec<usize>]| {
            let mut v: Vec<Vec<usize>> = o.iter().map(|x| {
                let mut x = x.clone();
                x.sort_unstable();
                x
            }).collect();
            v.sort();
            v
        };
        norm(&pgl_orbits) == norm(&psl_orbits)
    };
    let psl_semiregular = psl_orbits.iter().all(|o| o.len() as u64 == psl_order);

    let m10 = transfer.group(MobiusRecipe::M10)?;
    let (_, _, lifted) = super::lift_group(&transfer.sigma, &m10)?;
    let e = transfer.sigma.n();
    let sphere = crate::graph::sphere(&transfer.subdivision, e, 8)?;
    let m10_distance_8_orbits = lifted.stabilizer_orbits_on(e, &sphere)?;

    let facts = ChamberFacts {
        chambers: model.pairs.len(),
        opposition_valency: model.opposition.regular_degree(),
        opposition_aut_order: transfer.opposition_aut_order,
        matches_distance_8: true,
        pgl_stabilizer_order: pgl_order,
        pgl_opposite_orbits: sizes(&pgl_orbits),
        psl_stabilizer_order: psl_order,
        psl_opposite_orbits: sizes(&psl_orbits),
        psl_semiregular,
        same_orbits,
        m10_distance_8_orbits,
        verdict: false,
    };
    let verdict = facts.chambers == 45
        && facts.opposition_valency == Some(16)
        && facts.pgl_stabilizer_order == 16
        && facts.pgl_opposite_orbits == [8, 8]
        && facts.psl_stabilizer_order == 8
        && facts.psl_opposite_orbits == [8, 8]
        && facts.psl_semiregular
        && facts.same_orbits
        && facts.m10_distance_8_orbits == [16];
    Ok(ChamberFacts { verdict, ..facts })
}
