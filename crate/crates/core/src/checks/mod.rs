//! Decision procedures: local distance transitivity, arc transitivity,
//! Condition (*), cage certificates, the complete-graph criterion and the
//! per-row classification harness.

mod arcs;
mod cage;
mod cases;
mod chamber;
mod ldt;
mod star;

pub use arcs::{check_arc_transitive, count_arcs, ArcTransResult, DEFAULT_ARC_CAP};
pub use cage::{cage_certificate, remark_kn_check, CageCertificate, RemarkReport, CAGE_GIRTHS};
pub use cases::{
    corollary_bounds_check, default_cases, remark_cases, star_cases, verify_case, verify_table, ArcSection,
    CandidateReport, CaseReport, CaseSpec, CorollaryReport, Expected, ExpectedFailure, Family, GraphSection,
    GroupRule, GroupSection, LdtSection, LemmaSection, RemarkCase, SelectionReport, StarCase, TableOptions,
    TableReport, WeissLine,
};
pub use chamber::{chamber_facts, ChamberFacts, ChamberTransfer, MobiusRecipe};
pub use ldt::{
    check_local_sdt, ensure_automorphisms, representative_report, DepthOrbits, LdtFailure, LdtResult,
    RepresentativeReport,
};
pub use star::{condition_star, wreath_full, wreath_of, StarReport};

use crate::error::Result;
use crate::graph::{lift_to_subdivision, subdivision, Graph, SubdivisionMap};
use crate::perm::PermGroup;

/// `S(Σ)` with the action of `group` lifted from `Σ`.
pub fn lift_group(sigma: &Graph, group: &PermGroup) -> Result<(Graph, SubdivisionMap, PermGroup)> {
    let (s, map) = subdivision(sigma);
    let gens = group
        .generators()
        .iter()
        .map(|p| lift_to_subdivision(p, sigma, &map))
        .collect::<Result<Vec<_>>>()?;
    let lifted = PermGroup::new(s.n(), gens)?;
    Ok((s, map, lifted))
}
