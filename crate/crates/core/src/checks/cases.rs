//! The classification rows as test cases, with negative controls, and the
//! end-to-end table harness.

use rayon::prelude::*;
use serde::Serialize;

use super::arcs::{check_arc_transitive, DEFAULT_ARC_CAP};
use super::cage::{cage_certificate, remark_kn_check, RemarkReport};
use super::chamber::{chamber_facts, ChamberFacts, ChamberTransfer, MobiusRecipe};
use super::star::{bipart_preserving, condition_star, wreath_full, wreath_of, StarReport};
use super::{check_local_sdt, lift_group, LdtFailure};
use crate::autsolve::{automorphism_group, Coloring};
use crate::error::{Error, Result};
use crate::geometry::{
    complete_bipartite, cycle, hoffman_singleton, incidence_hexagon, incidence_pg2, incidence_w3, petersen,
    projective_line_group,
};
use crate::graph::{analyze, diameter, line_graph, Graph};
use crate::perm::{PermGroup, Permutation};

/// Graph constructors appearing in the table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    CompleteBipartite { n: usize },
    Petersen,
    HoffmanSingleton,
    Pg2 { q: usize },
    W3 { q: usize },
    Hexagon { q: usize },
    Cycle { n: usize },
}

impl Family {
    pub fn build(self) -> Result<Graph> {
        match self {
            Family::CompleteBipartite { n } => complete_bipartite(n, n),
            Family::Petersen => Ok(petersen()),
            Family::HoffmanSingleton => Ok(hoffman_singleton()),
            Family::Pg2 { q } => Ok(incidence_pg2(q)?.graph),
            Family::W3 { q } => Ok(incidence_w3(q)?.graph),
            Family::Hexagon { q } => Ok(incidence_hexagon(q)?.graph),
            Family::Cycle { n } => cycle(n),
        }
    }

    pub fn name(self) -> String {
        match self {
            Family::CompleteBipartite { n } => format!("K{n},{n}"),
            Family::Petersen => "Petersen".into(),
            Family::HoffmanSingleton => "HoSi".into(),
            Family::Pg2 { q } => format!("Inc(PG(2,{q}))"),
            Family::W3 { q } => format!("Inc(W(3,{q}))"),
            Family::Hexagon { q } => format!("Inc(H({q}))"),
            Family::Cycle { n } => format!("C{n}"),
        }
    }

    /// `(|VΣ|, g, d, D)` as tabulated.
    pub fn tabulated(self) -> Expected {
        let e = |n, g, d, big_d| Expected { n, g, d, big_d };
        match self {
            Family::CompleteBipartite { n } => e(2 * n, 4, 2, 4),
            Family::Petersen => e(10, 5, 2, 6),
            Family::HoffmanSingleton => e(50, 5, 2, 6),
            Family::Pg2 { q } => e(2 * (q.pow(3) - 1) / (q - 1), 6, 3, 6),
            Family::W3 { q } => e(2 * (q.pow(4) - 1) / (q - 1), 8, 4, 8),
            Family::Hexagon { q } => e(2 * (q.pow(6) - 1) / (q - 1), 12, 6, 12),
            Family::Cycle { n } => e(n, n, n / 2, n),
        }
    }
}

/// How the acting group is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupRule {
    /// The full automorphism group.
    Full,
    /// The derived subgroup of the full automorphism group.
    Derived,
    /// The subgroup of the full group fixing both biparts.
    BipartPreserving,
    /// Among the index-2 subgroups over the derived subgroup, the unique one
    /// passing the depth-`2d` check, cross-checked against the chamber model.
    Index2Pick,
    /// A named chamber-model subgroup on `Inc(W(3,2))`.
    Recipe(MobiusRecipe),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub n: usize,
    pub g: usize,
    pub d: usize,
    #[serde(rename = "D")]
    pub big_d: usize,
}

/// Reference data for the matching line of the `s >= 4` classification of
/// (G,s)-transitive graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WeissLine {
    pub line: u8,
    pub s: usize,
    pub g: usize,
    pub k: &'static str,
}

/// Expected shape of a failure at depth `2d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpectedFailure {
    pub depth: usize,
    pub orbit_sizes: Vec<usize>,
    pub at_edge_vertex: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseSpec {
    pub id: String,
    pub table_row: u8,
    pub family: Family,
    pub rule: GroupRule,
    pub expected: Expected,
    /// Whether `S(Σ)` should be locally (G,2d)-distance transitive.
    pub positive: bool,
    pub expected_failure: Option<ExpectedFailure>,
    pub weiss: Option<WeissLine>,
}

impl CaseSpec {
    pub fn new(table_row: u8, family: Family, rule: GroupRule, positive: bool) -> Self {
        let group = match rule {
            GroupRule::Full => "full".to_string(),
            GroupRule::Derived => "derived".to_string(),
            GroupRule::BipartPreserving => "bipart-preserving".to_string(),
            GroupRule::Index2Pick => "index2-pick".to_string(),
            GroupRule::Recipe(r) => r.name().to_string(),
        };
        let prefix = if positive { format!("row{table_row}") } else { "neg".to_string() };
        CaseSpec {
            id: format!("{prefix}/{}/{group}", family.name()),
            table_row,
            family,
            rule,
            expected: family.tabulated(),
            positive,
            expected_failure: None,
            weiss: weiss_line(family),
        }
    }
}

fn weiss_line(family: Family) -> Option<WeissLine> {
    match family {
        Family::Pg2 { .. } => Some(WeissLine { line: 1, s: 4, g: 6, k: "q+1" }),
        Family::W3 { q } if q.is_power_of_two() => Some(WeissLine { line: 2, s: 5, g: 8, k: "q+1" }),
        Family::Hexagon { q: 3 } => Some(WeissLine { line: 4, s: 7, g: 12, k: "q+1" }),
        _ => None,
    }
}

/// The positive rows and the negative controls. Row 7 only with
/// `include_hexagon`.
pub fn default_cases(include_hexagon: bool) -> Vec<CaseSpec> {
    use Family::*;
    use GroupRule::*;
    let mut cases = vec![
        CaseSpec::new(1, CompleteBipartite { n: 3 }, Full, true),
        CaseSpec::new(1, CompleteBipartite { n: 4 }, Full, true),
        CaseSpec::new(2, Petersen, Full, true),
        CaseSpec::new(3, HoffmanSingleton, Full, true),
        CaseSpec::new(3, HoffmanSingleton, Derived, true),
        CaseSpec::new(4, Pg2 { q: 2 }, Full, true),
        CaseSpec::new(4, Pg2 { q: 3 }, Full, true),
        CaseSpec::new(4, Pg2 { q: 4 }, Full, true),
        CaseSpec::new(5, W3 { q: 2 }, Full, true),
        CaseSpec::new(5, W3 { q: 4 }, Full, true),
        CaseSpec::new(6, W3 { q: 2 }, Index2Pick, true),
    ];
    if include_hexagon {
        cases.push(CaseSpec::new(7, Hexagon { q: 3 }, Full, true));
    }
    cases.extend((5..=12).map(|n| CaseSpec::new(8, Cycle { n }, Full, true)));
    cases.push(CaseSpec::new(5, W3 { q: 3 }, Full, false));
    cases.push(CaseSpec::new(1, CompleteBipartite { n: 3 }, BipartPreserving, false));
    let mut pgl = CaseSpec::new(6, W3 { q: 2 }, Recipe(MobiusRecipe::Pgl), false);
    pgl.expected_failure = Some(ExpectedFailure { depth: 8, orbit_sizes: vec![8, 8], at_edge_vertex: true });
    cases.push(pgl);
    cases.push(CaseSpec::new(6, W3 { q: 2 }, Recipe(MobiusRecipe::PSigmaL), false));
    cases
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphSection {
    pub n: usize,
    pub m: usize,
    pub k: Option<usize>,
    pub g: Option<usize>,
    pub d: usize,
    #[serde(rename = "D")]
    pub big_d: usize,
    pub delta: usize,
    pub cage: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateReport {
    pub order: String,
    pub ldt_verdict: bool,
    pub failure: Option<LdtFailure>,
    /// Chamber-model subgroups with the same elements.
    pub matches: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelectionReport {
    pub derived_order: String,
    pub candidates: Vec<CandidateReport>,
    pub picked: Option<usize>,
    pub picked_is_m10: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupSection {
    pub rule: GroupRule,
    pub order: String,
    /// Orbit sizes on the vertices of `S(Σ)`.
    pub orbit_sizes: Vec<usize>,
    pub selection: Option<SelectionReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LdtSection {
    pub s: usize,
    pub verdict: bool,
    pub failure: Option<LdtFailure>,
    pub full_s: usize,
    pub full_verdict: bool,
    pub full_failure: Option<LdtFailure>,
    /// Depth-`2d` and full-depth verdicts agree.
    pub equivalent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArcSection {
    pub s: usize,
    pub arc_count: u64,
    pub orbit_count: usize,
    pub verdict: bool,
}

/// Consequences of a passing depth-`2d` check, `None` when not applicable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaSection {
    /// `Σ` and `L(Σ)` are G-distance transitive (when `D <= 2d + 1`).
    pub line: Option<bool>,
    /// `Σ` is (G,d)-arc transitive and `2d <= g <= 2d + 1` (valency >= 3).
    pub d_arc: Option<bool>,
    /// `Σ` is a cage with girth in {3,4,5,6,8,12} (valency >= 3).
    pub cage: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseReport {
    pub row: String,
    pub table_row: u8,
    pub positive: bool,
    pub graph: GraphSection,
    pub expected: Expected,
    pub group: GroupSection,
    pub ldt: LdtSection,
    pub arc: Option<ArcSection>,
    pub lemmas: LemmaSection,
    pub star: Option<StarReport>,
    pub mismatches: Vec<String>,
    pub verdict: bool,
}

fn select_index2(sigma: &Graph, full: &PermGroup, depth: usize) -> Result<(PermGroup, SelectionReport)> {
    let transfer = ChamberTransfer::new()?;
    let named = [MobiusRecipe::PSigmaL, MobiusRecipe::Pgl, MobiusRecipe::M10]
        .into_iter()
        .map(|r| Ok((r, transfer.group(r)?)))
        .collect::<Result<Vec<_>>>()?;
    let derived = full.derived_subgroup();
    let subgroups = full.index2_subgroups_over_derived()?;
    let mut candidates = Vec::new();
    for h in &subgroups {
        let (s, _, lifted) = lift_group(sigma, h)?;
        let ldt = check_local_sdt(&s, &lifted, depth)?;
        let mut matches = Vec::new();
        for (r, g) in &named {
            if h.same_elements(g)? {
                matches.push(r.name().to_string());
            }
        }
        candidates.push(CandidateReport { order: h.order().to_string(), ldt_verdict: ldt.verdict, failure: ldt.failure, matches });
    }
    let passing: Vec<usize> = (0..candidates.len()).filter(|&i| candidates[i].ldt_verdict).collect();
    let picked = (passing.len() == 1).then(|| passing[0]);
    let picked_is_m10 = picked.is_some_and(|i| candidates[i].matches == [MobiusRecipe::M10.name()]);
    let group = picked.map_or_else(|| full.clone(), |i| subgroups[i].clone());
    let report = SelectionReport { derived_order: derived.order().to_string(), candidates, picked, picked_is_m10 };
    Ok((group, report))
}

fn case_group(spec: &CaseSpec, sigma: &Graph, depth: usize) -> Result<(PermGroup, Option<SelectionReport>)> {
    let full = || automorphism_group(sigma, &Coloring::unit(sigma.n()));
    Ok(match spec.rule {
        GroupRule::Full => (full()?, None),
        GroupRule::Derived => (full()?.derived_subgroup(), None),
        GroupRule::BipartPreserving => match spec.family {
            Family::CompleteBipartite { n } => (bipart_preserving(&full()?, n)?, None),
            _ => return Err(Error::Unsupported("bipart-preserving rule needs K_{n,n}".into())),
        },
        GroupRule::Index2Pick => {
            let (g, sel) = select_index2(sigma, &full()?, depth)?;
            (g, Some(sel))
        }
        GroupRule::Recipe(r) => {
            if spec.family != (Family::W3 { q: 2 }) {
                return Err(Error::Unsupported("chamber-model recipes act on Inc(W(3,2)) only".into()));
            }
            (ChamberTransfer::new()?.group(r)?, None)
        }
    })
}

fn is_distance_transitive(g: &Graph, group: &PermGroup) -> Result<bool> {
    Ok(group.is_transitive() && check_local_sdt(g, group, diameter(g)?)?.verdict)
}

/// Builds the case, measures it, obtains its group and checks the depth-`2d`
/// and full-depth verdicts together with the lemma consequences.
pub fn verify_case(spec: &CaseSpec) -> Result<CaseReport> {
    let sigma = spec.family.build()?;
    let a = analyze(&sigma)?;
    let graph = GraphSection {
        n: a.n,
        m: a.m,
        k: (a.min_valency == a.max_valency).then_some(a.min_valency),
        g: a.girth,
        d: a.diameter,
        big_d: a.subdivision_diameter,
        delta: a.delta,
        cage: a.is_cage,
    };
    let mut mismatches = Vec::new();
    let e = spec.expected;
    for (name, got, want) in [
        ("|V|", graph.n, e.n),
        ("g", graph.g.unwrap_or(usize::MAX), e.g),
        ("d", graph.d, e.d),
        ("D", graph.big_d, e.big_d),
    ] {
        if got != want {
            mismatches.push(format!("{name}: got {got}, expected {want}"));
        }
    }
    let (d, big_d) = (graph.d, graph.big_d);
    let (group, selection) = case_group(spec, &sigma, 2 * d)?;
    if let Some(sel) = &selection {
        if sel.picked.is_none() {
            let passing = sel.candidates.iter().filter(|c| c.ldt_verdict).count();
            mismatches.push(format!("expected exactly one passing index-2 subgroup, found {passing}"));
        } else if !sel.picked_is_m10 {
            mismatches.push("picked subgroup does not match the chamber-model M10".into());
        }
    }
    let (s, _, lifted) = lift_group(&sigma, &group)?;
    let at_2d = check_local_sdt(&s, &lifted, 2 * d)?;
    let at_full = check_local_sdt(&s, &lifted, big_d)?;
    let ldt = LdtSection {
        s: 2 * d,
        verdict: at_2d.verdict,
        failure: at_2d.failure.clone(),
        full_s: big_d,
        full_verdict: at_full.verdict,
        full_failure: at_full.failure.clone(),
        equivalent: at_2d.verdict == at_full.verdict,
    };
    if !ldt.equivalent {
        mismatches.push(format!("depth {} verdict {} but full depth verdict {}", 2 * d, ldt.verdict, ldt.full_verdict));
    }
    if ldt.verdict != spec.positive {
        mismatches.push(format!("depth {} verdict {}, expected {}", 2 * d, ldt.verdict, spec.positive));
    }
    if let (Some(want), Some(got)) = (&spec.expected_failure, &ldt.failure) {
        let shape = ExpectedFailure {
            depth: got.depth,
            orbit_sizes: got.orbit_sizes.clone(),
            at_edge_vertex: got.vertex >= sigma.n(),
        };
        if &shape != want {
            mismatches.push(format!("failure shape {shape:?}, expected {want:?}"));
        }
    }

    let k = graph.k.unwrap_or(0);
    let mut arc = None;
    let mut lemmas = LemmaSection { line: None, d_arc: None, cage: None };
    if ldt.verdict {
        if big_d <= 2 * d + 1 {
            let edges: Vec<usize> = (sigma.n()..s.n()).collect();
            let on_edges = lifted.restrict(&edges)?;
            let ok = is_distance_transitive(&sigma, &group)? && is_distance_transitive(&line_graph(&sigma), &on_edges)?;
            lemmas.line = Some(ok);
        }
        if k >= 3 {
            let r = check_arc_transitive(&sigma, &group, d, DEFAULT_ARC_CAP)?;
            let g = graph.g.unwrap_or(0);
            lemmas.d_arc = Some(r.verdict && 2 * d <= g && g <= 2 * d + 1);
            arc = Some(ArcSection { s: d, arc_count: r.arc_count, orbit_count: r.orbit_count, verdict: r.verdict });
            let cert = cage_certificate(&sigma)?;
            lemmas.cage = Some(cert.is_cage && cert.girth_allowed);
        }
    }
    for (name, v) in [("line", lemmas.line), ("d-arc", lemmas.d_arc), ("cage", lemmas.cage)] {
        if v == Some(false) {
            mismatches.push(format!("{name} consequence fails"));
        }
    }

    let star = match spec.family {
        Family::CompleteBipartite { n } => {
            let r = condition_star(&group, n)?;
            if r.verdict != spec.positive {
                mismatches.push(format!("Condition (*) verdict {}, expected {}", r.verdict, spec.positive));
            }
            Some(r)
        }
        _ => None,
    };

    let orbit_sizes = {
        let mut v = lifted.orbits().sizes;
        v.sort_unstable();
        v
    };
    let verdict = mismatches.is_empty();
    Ok(CaseReport {
        row: spec.id.clone(),
        table_row: spec.table_row,
        positive: spec.positive,
        graph,
        expected: spec.expected,
        group: GroupSection { rule: spec.rule, order: group.order().to_string(), orbit_sizes, selection },
        ldt,
        arc,
        lemmas,
        star,
        mismatches,
        verdict,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorollaryReport {
    pub considered: Vec<String>,
    pub max_d: usize,
    #[serde(rename = "max_D")]
    pub max_big_d: usize,
    pub verdict: bool,
}

/// Every passing positive case of valency at least 3 has `d <= 6` and
/// `D <= 12`.
pub fn corollary_bounds_check(reports: &[CaseReport]) -> CorollaryReport {
    let used: Vec<&CaseReport> = reports
        .iter()
        .filter(|r| r.positive && r.ldt.verdict && r.graph.k.is_some_and(|k| k >= 3))
        .collect();
    let max_d = used.iter().map(|r| r.graph.d).max().unwrap_or(0);
    let max_big_d = used.iter().map(|r| r.graph.big_d).max().unwrap_or(0);
    CorollaryReport {
        considered: used.iter().map(|r| r.row.clone()).collect(),
        max_d,
        max_big_d,
        verdict: max_d <= 6 && max_big_d <= 12,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RemarkCase {
    pub label: String,
    pub report: RemarkReport,
    pub verdict: bool,
}

/// The complete-graph criterion on `S_4`, `A_5` and `PΓL(2,8)`.
pub fn remark_cases() -> Result<Vec<RemarkCase>> {
    let pgammal = projective_line_group(8, true)?;
    [("S4", 4, PermGroup::symmetric(4)), ("A5", 5, PermGroup::alternating(5)), ("PGammaL(2,8)", 9, pgammal)]
        .into_iter()
        .map(|(label, n, g)| {
            let report = remark_kn_check(n, &g)?;
            let verdict = report.level_2_agrees && report.full_agrees;
            Ok(RemarkCase { label: label.to_string(), report, verdict })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarCase {
    pub label: String,
    pub report: StarReport,
    pub verdict: bool,
}

/// Condition (*) on `S_3 wr S_2`, `S_3 x S_3` and `A_3 wr S_2`.
pub fn star_cases() -> Result<Vec<StarCase>> {
    let a3 = vec![Permutation::from_cycles(3, &[&[0, 1, 2]])?];
    let no_swap = wreath_of(3, PermGroup::symmetric(3).generators(), false);
    let cases = [
        ("S3 wr S2", wreath_full(3)),
        ("S3 x S3", no_swap),
        ("A3 wr S2", wreath_of(3, &a3, true)),
    ];
    cases
        .into_iter()
        .map(|(label, g)| {
            let r = condition_star(&g, 3)?;
            let verdict = match label {
                "S3 wr S2" => r.verdict,
                "S3 x S3" => !r.clause_iii_interchange && !r.verdict,
                _ => !r.clause_i && !r.verdict,
            };
            Ok(StarCase { label: label.to_string(), report: r, verdict })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, Default)]
pub struct TableOptions {
    pub include_hexagon: bool,
    /// Worker threads; 0 uses the rayon default.
    pub jobs: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub cases: Vec<CaseReport>,
    pub chamber: ChamberFacts,
    pub star: Vec<StarCase>,
    pub remark: Vec<RemarkCase>,
    pub corollary: CorollaryReport,
    pub verdict: bool,
}

impl TableReport {
    /// Identifiers of every failing item.
    pub fn failures(&self) -> Vec<String> {
        let mut out: Vec<String> = self.cases.iter().filter(|c| !c.verdict).map(|c| c.row.clone()).collect();
        if !self.chamber.verdict {
            out.push("chamber".into());
        }
        out.extend(self.star.iter().filter(|c| !c.verdict).map(|c| format!("star/{}", c.label)));
        out.extend(self.remark.iter().filter(|c| !c.verdict).map(|c| format!("remark/{}", c.label)));
        if !self.corollary.verdict {
            out.push("corollary".into());
        }
        out
    }
}

/// Runs every case, the chamber-model facts, Condition (*), the
/// complete-graph criterion and the corollary bounds.
pub fn verify_table(options: TableOptions) -> Result<TableReport> {
    let specs = default_cases(options.include_hexagon);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.jobs)
        .build()
        .map_err(|e| Error::Unsupported(e.to_string()))?;
    let cases = pool.install(|| specs.par_iter().map(verify_case).collect::<Result<Vec<_>>>())?;
    let chamber = chamber_facts(&ChamberTransfer::new()?)?;
    let star = star_cases()?;
    let remark = remark_cases()?;
    let corollary = corollary_bounds_check(&cases);
    let mut report = TableReport { cases, chamber, star, remark, corollary, verdict: false };
    report.verdict = report.failures().is_empty();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tabulated_values() {
        let e = Family::W3 { q: 4 }.tabulated();
        assert_eq!((e.n, e.g, e.d, e.big_d), (170, 8, 4, 8));
        let e = Family::Cycle { n: 9 }.tabulated();
        assert_eq!((e.n, e.g, e.d, e.big_d), (9, 9, 4, 9));
    }

    #[test]
    fn default_cases_have_unique_ids() {
        let cases = default_cases(true);
        let mut ids: Vec<&str> = cases.iter().map(|c| c.id.as_str()).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), cases.len());
        assert!(cases.iter().any(|c| c.table_row == 7));
        assert!(!default_cases(false).iter().any(|c| c.table_row == 7));
        assert_eq!(cases.iter().filter(|c| !c.positive).count(), 4);
    }

    #[test]
    fn petersen_row() {
        let spec = CaseSpec::new(2, Family::Petersen, GroupRule::Full, true);
        let r = verify_case(&spec).unwrap();
        assert!(r.verdict, "{:?}", r.mismatches);
        assert_eq!(r.group.order, "120");
        assert_eq!(r.lemmas, LemmaSection { line: None, d_arc: Some(true), cage: Some(true) });
    }

    #[test]
    fn tampered_expectation_is_reported() {
        let mut spec = CaseSpec::new(2, Family::Petersen, GroupRule::Full, true);
        spec.expected.big_d = 7;
        let r = verify_case(&spec).unwrap();
        assert!(!r.verdict);
        assert_eq!(r.mismatches, vec!["D: got 6, expected 7".to_string()]);
    }

    #[test]
    fn corollary_bounds_ignore_cycles() {
        let reports: Vec<CaseReport> = [Family::Petersen, Family::Cycle { n: 12 }]
            .into_iter()
            .map(|f| verify_case(&CaseSpec::new(0, f, GroupRule::Full, true)).unwrap())
            .collect();
        let c = corollary_bounds_check(&reports);
        assert_eq!(c.considered.len(), 1);
        assert_eq!((c.max_d, c.max_big_d, c.verdict), (2, 6, true));
    }
}
