//! Finite fields and constructors for every graph family in the
//! classification: complete and complete bipartite graphs, cycles, the
//! Petersen and Hoffman–Singleton graphs, and the incidence graphs of
//! PG(2,q), W(3,q) and H(q). Also the PG(1,9) chamber model of W(3,2).

mod classic;
pub mod field;
mod incidence;
pub mod mobius;

pub use classic::{complete, complete_bipartite, cycle, hoffman_singleton, petersen};
pub use field::GField;
pub use incidence::{incidence_hexagon, incidence_pg2, incidence_w3, projective_points, GeometryGraph, ProjPoint};
pub use mobius::{
    chamber_model_w32, cross_ratio, mobius_maps, mobius_subgroups, projective_line_group, ChamberModel, MobiusGroups,
};
