//! The `sdt-verify` command line.
//!
//! Exit codes: 0 ok, 1 verification failed, 2 bad graph or parameters,
//! 3 vertex or arc limit exceeded, 4 bad group.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use crate::autsolve::{automorphism_group, Coloring};
use crate::checks::{
    check_arc_transitive, check_local_sdt, lift_group, verify_table, ChamberTransfer, LdtResult, MobiusRecipe,
    TableOptions, TableReport, DEFAULT_ARC_CAP,
};
use crate::error::Error;
use crate::geometry::{
    complete, complete_bipartite, cycle, hoffman_singleton, incidence_hexagon, incidence_pg2, incidence_w3, petersen,
};
use crate::graph::io::{read_edge_list, write_edge_list, write_labels};
use crate::graph::{analyze, moore_bound, subdivision, Graph};
use crate::perm::io::{read_generators, write_generators};
use crate::perm::PermGroup;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_GRAPH: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;
pub const EXIT_GROUP: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "sdt-verify", version, about = "Subdivision graphs and local distance-transitivity checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the edge list of a named graph.
    Construct {
        #[command(flatten)]
        graph: GraphArgs,
        /// Emit the subdivision graph instead.
        #[arg(long)]
        subdivide: bool,
        /// Edge-list output path (default stdout).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Label sidecar path.
        #[arg(long)]
        labels: Option<PathBuf>,
    },
    /// Print the invariant report of a graph.
    Analyze {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Compute the automorphism group.
    Aut {
        #[command(flatten)]
        graph: GraphArgs,
        /// Work on the subdivision graph.
        #[arg(long)]
        subdivide: bool,
        /// Generator file output path.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check local (G,s)-distance transitivity.
    CheckLdt {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        group: GroupArgs,
        /// Lift the group to the subdivision graph and check there.
        #[arg(long)]
        subdivide: bool,
        /// Depth; defaults to the diameter of the checked graph.
        #[arg(long)]
        s: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check (G,s)-arc transitivity.
    CheckArc {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        subdivide: bool,
        #[arg(long)]
        s: usize,
        #[arg(long, default_value_t = DEFAULT_ARC_CAP)]
        arc_cap: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Reproduce every table row, negative control and side check.
    VerifyTable {
        #[arg(long)]
        include_hexagon: bool,
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Compare against a stored JSON report; exit status reflects the comparison.
        #[arg(long)]
        golden: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Moore bound n0(k, g).
    Moore { k: u64, g: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

/// A named constructor with parameters, or an edge-list file.
#[derive(Debug, Clone, Args)]
#[command(group(ArgGroup::new("input").required(true).args(["name", "graph"])))]
pub struct GraphArgs {
    /// petersen | heawood | tutte-coxeter | hosi | kn | kbip | cycle | pg2 | w3 | hexagon
    pub name: Option<String>,
    /// Positional size parameters, e.g. `kbip 3 3`.
    pub params: Vec<usize>,
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Edge-list file.
    #[arg(long)]
    pub graph: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct GroupArgs {
    /// Generator file.
    #[arg(long, conflicts_with = "group")]
    pub gens: Option<PathBuf>,
    /// full | derived | psl | pgl | psigmal | m10 | pgammal (the last five on w3 --q 2)
    #[arg(long, default_value = "full")]
    pub group: String,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

fn graph_failure(e: Error) -> Failure {
    let code = match e {
        Error::LimitExceeded { .. } | Error::CapExceeded { .. } => EXIT_LIMIT,
        _ => EXIT_GRAPH,
    };
    Failure::new(code, e.to_string())
}

fn group_failure(e: Error) -> Failure {
    let code = match e {
        Error::LimitExceeded { .. } | Error::CapExceeded { .. } => EXIT_LIMIT,
        Error::Disconnected | Error::NotBipartite => EXIT_GRAPH,
        _ => EXIT_GROUP,
    };
    Failure::new(code, e.to_string())
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::new(EXIT_GRAPH, format!("{}: {e}", path.display())))
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::new(EXIT_GRAPH, format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

impl GraphArgs {
    fn param(&self, flag: Option<usize>, index: usize, what: &str) -> Result<usize, Failure> {
        flag.or_else(|| self.params.get(index).copied())
            .ok_or_else(|| Failure::new(EXIT_GRAPH, format!("missing parameter {what}")))
    }

    fn is_w32(&self) -> bool {
        match self.name.as_deref() {
            Some("tutte-coxeter") => true,
            Some("w3") => self.param(self.q, 0, "--q").ok() == Some(2),
            _ => false,
        }
    }

    fn build(&self) -> Result<Graph, Failure> {
        if let Some(path) = &self.graph {
            return read_edge_list(&read_file(path)?).map_err(graph_failure);
        }
        let name = self.name.as_deref().unwrap_or_default();
        let q = || self.param(self.q, 0, "--q");
        let n = || self.param(self.n, 0, "--n");
        let g = match name {
            "petersen" => Ok(petersen()),
            "heawood" => incidence_pg2(2).map(|g| g.graph),
            "tutte-coxeter" => incidence_w3(2).map(|g| g.graph),
            "hosi" => Ok(hoffman_singleton()),
            "kn" | "complete" => complete(n()?),
            "kbip" => {
                let a = n()?;
                let b = self.params.get(if self.n.is_some() { 0 } else { 1 }).copied().unwrap_or(a);
                complete_bipartite(a, b)
            }
            "cycle" => cycle(n()?),
            "pg2" => incidence_pg2(q()?).map(|g| g.graph),
            "w3" => incidence_w3(q()?).map(|g| g.graph),
            "hexagon" => incidence_hexagon(q()?).map(|g| g.graph),
            other => return Err(Failure::new(EXIT_GRAPH, format!("unknown graph '{other}'"))),
        };
        g.map_err(graph_failure)
    }
}

fn resolve_group(graph: &GraphArgs, args: &GroupArgs, sigma: &Graph) -> Result<PermGroup, Failure> {
    if let Some(path) = &args.gens {
        let (degree, gens) = read_generators(&read_file(path)?).map_err(group_failure)?;
        if degree != sigma.n() {
            return Err(group_failure(Error::DegreeMismatch { expected: sigma.n(), got: degree }));
        }
        return PermGroup::new(degree, gens).map_err(group_failure);
    }
    let full = || automorphism_group(sigma, &Coloring::unit(sigma.n())).map_err(group_failure);
    match args.group.as_str() {
        "full" => full(),
        "derived" => Ok(full()?.derived_subgroup()),
        name => {
            let recipe = MobiusRecipe::parse(name)
                .ok_or_else(|| Failure::new(EXIT_GROUP, format!("unknown group '{name}'")))?;
            if !graph.is_w32() {
                return Err(Failure::new(EXIT_GROUP, format!("group '{name}' acts on tutte-coxeter (w3 --q 2) only")));
            }
            ChamberTransfer::new().and_then(|t| t.group(recipe)).map_err(group_failure)
        }
    }
}

/// The checked graph and group, lifted to the subdivision when asked.
fn target(graph: &GraphArgs, group: &GroupArgs, subdivide: bool) -> Result<(Graph, PermGroup), Failure> {
    let sigma = graph.build()?;
    let g = resolve_group(graph, group, &sigma)?;
    if subdivide {
        let (s, _, lifted) = lift_group(&sigma, &g).map_err(group_failure)?;
        Ok((s, lifted))
    } else {
        Ok((sigma, g))
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn ldt_tsv(r: &LdtResult) -> String {
    let mut out = String::from("vertex\tdepth\tsphere\torbit_sizes\n");
    for rep in &r.representatives {
        for d in &rep.depths {
            let sizes: Vec<String> = d.orbit_sizes.iter().map(usize::to_string).collect();
            writeln!(out, "{}\t{}\t{}\t{}", rep.vertex, d.depth, d.sphere_size, sizes.join(",")).unwrap();
        }
    }
    writeln!(out, "verdict\t{}", r.verdict).unwrap();
    out
}

fn table_tsv(r: &TableReport) -> String {
    let mut out = String::from("row\tn\tg\td\tD\torder\tldt\tfull\tverdict\n");
    for c in &r.cases {
        let g = c.graph.g.map_or("inf".to_string(), |g| g.to_string());
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            c.row, c.graph.n, g, c.graph.d, c.graph.big_d, c.group.order, c.ldt.verdict, c.ldt.full_verdict, c.verdict
        )
        .unwrap();
    }
    writeln!(out, "chamber\t{}", r.chamber.verdict).unwrap();
    for s in &r.star {
        writeln!(out, "star/{}\t{}", s.label, s.verdict).unwrap();
    }
    for s in &r.remark {
        writeln!(out, "remark/{}\t{}", s.label, s.verdict).unwrap();
    }
    writeln!(out, "corollary\t{}", r.corollary.verdict).unwrap();
    writeln!(out, "verdict\t{}", r.verdict).unwrap();
    out
}

/// Names an array element by its `row` or `label` key, else by position.
fn element_name(v: &Value, i: usize) -> String {
    ["row", "label"]
        .iter()
        .find_map(|k| v.get(k).and_then(Value::as_str).map(str::to_string))
        .unwrap_or_else(|| i.to_string())
}

/// Differences between two JSON trees, one line per differing leaf.
pub fn json_diff(path: &str, golden: &Value, got: &Value, out: &mut Vec<String>) {
    match (golden, got) {
        (Value::Object(a), Value::Object(b)) => {
            for (k, va) in a {
                match b.get(k) {
                    Some(vb) => json_diff(&format!("{path}.{k}"), va, vb, out),
                    None => out.push(format!("{path}.{k}: missing")),
                }
            }
            for k in b.keys().filter(|k| !a.contains_key(*k)) {
                out.push(format!("{path}.{k}: unexpected"));
            }
        }
        (Value::Array(a), Value::Array(b)) if a.len() == b.len() => {
            for (i, (va, vb)) in a.iter().zip(b).enumerate() {
                json_diff(&format!("{path}[{}]", element_name(va, i)), va, vb, out);
            }
        }
        _ if golden != got => out.push(format!("{path}: golden {golden}, got {got}")),
        _ => {}
    }
}

fn run(cli: Cli) -> Result<i32, Failure> {
    match cli.command {
        Command::Construct { graph, subdivide, out, labels } => {
            let mut g = graph.build()?;
            if subdivide {
                g = subdivision(&g).0;
            }
            write_out(out.as_deref(), &write_edge_list(&g))?;
            if let Some(path) = labels {
                let text = write_labels(&g).unwrap_or_default();
                write_out(Some(&path), &text)?;
            }
            Ok(EXIT_OK)
        }
        Command::Analyze { graph, format } => {
            let g = graph.build()?;
            let r = analyze(&g).map_err(graph_failure)?;
            let text = match format {
                Format::Json => to_json(&r),
                Format::Tsv => {
                    let v = serde_json::to_value(&r).unwrap();
                    let obj = v.as_object().unwrap();
                    let keys: Vec<&str> = obj.keys().map(String::as_str).collect();
                    let vals: Vec<String> = obj.values().map(Value::to_string).collect();
                    format!("{}\n{}\n", keys.join("\t"), vals.join("\t"))
                }
            };
            write_out(None, &text)?;
            Ok(EXIT_OK)
        }
        Command::Aut { graph, subdivide, out } => {
            let mut g = graph.build()?;
            if subdivide {
                g = subdivision(&g).0;
            }
            let aut = automorphism_group(&g, &Coloring::unit(g.n())).map_err(graph_failure)?;
            println!("order {}", aut.order());
            if let Some(path) = out {
                write_out(Some(&path), &write_generators(g.n(), aut.generators()))?;
            }
            Ok(EXIT_OK)
        }
        Command::CheckLdt { graph, group, subdivide, s, format } => {
            let (g, grp) = target(&graph, &group, subdivide)?;
            let depth = match s {
                Some(s) => s,
                None => crate::graph::diameter(&g).map_err(graph_failure)?,
            };
            let r = check_local_sdt(&g, &grp, depth).map_err(group_failure)?;
            let text = match format {
                Format::Json => to_json(&r),
                Format::Tsv => ldt_tsv(&r),
            };
            write_out(None, &text)?;
            Ok(if r.verdict { EXIT_OK } else { EXIT_VERIFY })
        }
        Command::CheckArc { graph, group, subdivide, s, arc_cap, format } => {
            let (g, grp) = target(&graph, &group, subdivide)?;
            let r = check_arc_transitive(&g, &grp, s, arc_cap).map_err(group_failure)?;
            let text = match format {
                Format::Json => to_json(&r),
                Format::Tsv => format!(
                    "s\tarcs\torbits\tgeodesic\tverdict\n{}\t{}\t{}\t{}\t{}\n",
                    r.s, r.arc_count, r.orbit_count, r.geodesic_count, r.verdict
                ),
            };
            write_out(None, &text)?;
            Ok(if r.verdict { EXIT_OK } else { EXIT_VERIFY })
        }
        Command::VerifyTable { include_hexagon, jobs, golden, format, out } => {
            let r = verify_table(TableOptions { include_hexagon, jobs }).map_err(graph_failure)?;
            let json = to_json(&r);
            let text = match format {
                Format::Json => json.clone(),
                Format::Tsv => table_tsv(&r),
            };
            write_out(out.as_deref(), &text)?;
            for f in r.failures() {
                eprintln!("FAIL {f}");
            }
            if let Some(path) = golden {
                let want: Value = serde_json::from_str(&read_file(&path)?)
                    .map_err(|e| Failure::new(EXIT_GRAPH, format!("{}: {e}", path.display())))?;
                let got: Value = serde_json::from_str(&json).unwrap();
                let mut diff = Vec::new();
                json_diff("$", &want, &got, &mut diff);
                for line in &diff {
                    eprintln!("golden mismatch {line}");
                }
                return Ok(if diff.is_empty() { EXIT_OK } else { EXIT_VERIFY });
            }
            Ok(if r.verdict { EXIT_OK } else { EXIT_VERIFY })
        }
        Command::Moore { k, g } => {
            if k < 2 || g < 3 {
                return Err(Failure::new(EXIT_GRAPH, "moore needs k >= 2 and g >= 3"));
            }
            println!("{}", moore_bound(k, g));
            Ok(EXIT_OK)
        }
    }
}

/// Parses `args` and runs the command, returning the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_GRAPH } else { EXIT_OK };
        }
    };
    let name = format!("{:?}", cli.command).split([' ', '{']).next().unwrap_or_default().to_string();
    let start = Instant::now();
    let code = run(cli).unwrap_or_else(|f| {
        eprintln!("error: {}", f.message);
        f.code
    });
    eprintln!("sdt-verify: {name} finished in {:.3}s", start.elapsed().as_secs_f64());
    code
}
