//! The `nspg` command line.
//!
//! Exit status: 0 on success, 1 when `verify` records a FAIL, 2 for usage,
//! parse and subgroup-selection errors, 3 when `analyze` had to leave some
//! invariant unknown because of the solver budget.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algorithms::{analyze, GraphInvariants, SolverBudget};
use crate::group::{make_group, Element, FiniteGroup, GroupSpec};
use crate::harness::{
    default_catalog, default_catalog_groups, run_catalog, Catalog, SubgroupSelector, TheoremId,
};
use crate::power_graph::{nsb_power_graph, power_graph};
use crate::subgroup::{all_normal_subgroups, SubgroupSet};

#[derive(Parser, Debug)]
#[command(name = "nspg", version, about = "Normal-subgroup-based power graphs of finite groups")]
struct Cli {
    /// Solver budget: a vertex limit such as `40`, or `exact=N,odd_hole=N,steps=N`.
    #[arg(long, global = true, env = "NSPG_BUDGET")]
    budget: Option<SolverBudget>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the group specs of the default catalog.
    ListGroups,
    /// Enumerate the normal subgroups of a group with their indices.
    ListNormalSubgroups {
        group: GroupSpec,
        #[arg(long, value_enum, default_value_t = ListFormat::Table)]
        format: ListFormat,
    },
    /// Emit Γ_H(G).
    Build {
        group: GroupSpec,
        #[command(flatten)]
        subgroup: SubgroupArg,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
    },
    /// Emit the power graph Γ(G).
    PowerGraph {
        group: GroupSpec,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
    },
    /// Compute every invariant of Γ_H(G).
    Analyze {
        group: GroupSpec,
        #[command(flatten)]
        subgroup: SubgroupArg,
        #[arg(long, value_enum, default_value_t = ListFormat::Json)]
        format: ListFormat,
    },
    /// Check the closed-form predictions over a catalog.
    Verify {
        /// Catalog JSON file replacing the default catalog.
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Comma-separated theorem ids; overrides the catalog's list.
        #[arg(long, value_delimiter = ',')]
        theorems: Option<Vec<TheoremId>>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct SubgroupArg {
    /// Generators of H as comma-separated element indices (empty for {e}).
    #[arg(long, value_parser = parse_generators, allow_hyphen_values = true)]
    subgroup: Option<Generators>,
    /// Index of H in `list-normal-subgroups`.
    #[arg(long)]
    subgroup_index: Option<usize>,
}

impl SubgroupArg {
    fn selector(&self) -> SubgroupSelector {
        match (&self.subgroup, self.subgroup_index) {
            (Some(gens), _) => SubgroupSelector::Generators(gens.0.clone()),
            (None, Some(k)) => SubgroupSelector::Index(k),
            (None, None) => unreachable!("clap requires one selector"),
        }
    }
}

#[derive(Clone, Debug)]
struct Generators(Vec<Element>);

fn parse_generators(s: &str) -> Result<Generators, String> {
    if s.is_empty() || s == "e" {
        return Ok(Generators(Vec::new()));
    }
    s.split(',')
        .map(|t| t.parse::<Element>().map_err(|_| format!("`{t}` is not an element index")))
        .collect::<Result<_, _>>()
        .map(Generators)
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ListFormat {
    Table,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ReportFormat {
    Json,
    Csv,
}

/// Exit status plus the text for each stream.
struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        Self {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

/// Runs the command line `argv` (program name first) and returns the exit
/// status. Output goes to `out`, diagnostics to `err`.
pub fn execute<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let outcome = match Cli::try_parse_from(argv) {
        Ok(cli) => run(cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            }
        }
    };
    // a closed pipe is not worth a panic
    let _ = out.write_all(outcome.stdout.as_bytes());
    let _ = err.write_all(outcome.stderr.as_bytes());
    outcome.code
}

fn run(cli: Cli) -> Outcome {
    let budget = cli.budget.unwrap_or_default();
    match cli.command {
        Command::ListGroups => {
            let mut s = String::new();
            for spec in default_catalog_groups() {
                let _ = writeln!(s, "{spec}");
            }
            Outcome::ok(s)
        }
        Command::ListNormalSubgroups { group, format } => {
            let g = match make_group(&group) {
                Ok(g) => g,
                Err(e) => return Outcome::usage(e),
            };
            let subgroups = all_normal_subgroups(&g).expect("group within budget");
            Outcome::ok(match format {
                ListFormat::Table => normal_subgroup_table(&subgroups),
                ListFormat::Json => normal_subgroup_json(&subgroups),
            })
        }
        Command::Build {
            group,
            subgroup,
            format,
        } => {
            let (g, h) = match resolve(&group, &subgroup) {
                Ok(pair) => pair,
                Err(o) => return o,
            };
            let gamma = nsb_power_graph(&g, &h).expect("selector checked normal and proper");
            Outcome::ok(emit(&gamma.graph, format))
        }
        Command::PowerGraph { group, format } => match make_group(&group) {
            Ok(g) => Outcome::ok(emit(&power_graph(&g), format)),
            Err(e) => Outcome::usage(e),
        },
        Command::Analyze {
            group,
            subgroup,
            format,
        } => {
            let (g, h) = match resolve(&group, &subgroup) {
                Ok(pair) => pair,
                Err(o) => return o,
            };
            let gamma = nsb_power_graph(&g, &h).expect("selector checked normal and proper");
            let inv = analyze(&gamma.graph, &budget);
            let doc = Analysis {
                group: g.name().to_string(),
                subgroup: h.description(),
                invariants: inv,
            };
            let stdout = match format {
                ListFormat::Json => {
                    let mut s = serde_json::to_string_pretty(&doc).expect("serializes");
                    s.push('\n');
                    s
                }
                ListFormat::Table => analysis_table(&doc),
            };
            if doc.invariants.is_partial() {
                let mut stderr = String::new();
                for m in &doc.invariants.budget_exceeded {
                    let _ = writeln!(stderr, "warning: {m}");
                }
                return Outcome {
                    code: 3,
                    stdout,
                    stderr,
                };
            }
            Outcome::ok(stdout)
        }
        Command::Verify {
            catalog,
            theorems,
            format,
        } => {
            let mut cat = match catalog {
                None => default_catalog(),
                Some(path) => match std::fs::read_to_string(&path) {
                    Ok(text) => match Catalog::from_json(&text) {
                        Ok(c) => c,
                        Err(e) => return Outcome::usage(format!("{}: {e}", path.display())),
                    },
                    Err(e) => return Outcome::usage(format!("{}: {e}", path.display())),
                },
            };
            for inst in &cat.instances {
                if let Err(e) = inst.resolve() {
                    return Outcome::usage(format!("catalog entry {}: {e}", inst.group));
                }
            }
            if let Some(t) = theorems {
                cat.theorems = t;
            }
            cat.budget = budget;
            let report = run_catalog(&cat);
            let stdout = match format {
                ReportFormat::Json => report.to_json(),
                ReportFormat::Csv => report.to_csv(),
            };
            Outcome {
                code: i32::from(report.has_failures()),
                stdout,
                stderr: String::new(),
            }
        }
    }
}

fn resolve(spec: &GroupSpec, sel: &SubgroupArg) -> Result<(FiniteGroup, SubgroupSet), Outcome> {
    let g = make_group(spec).map_err(Outcome::usage)?;
    let h = sel.selector().resolve(&g).map_err(Outcome::usage)?;
    Ok((g, h))
}

fn emit(graph: &crate::graph::SimpleGraph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Dot => graph.to_dot(),
        GraphFormat::Json => {
            let mut s = graph.to_json();
            s.push('\n');
            s
        }
    }
}

#[derive(Serialize)]
struct Analysis {
    group: String,
    subgroup: String,
    #[serde(flatten)]
    invariants: GraphInvariants,
}

#[derive(Serialize)]
struct NormalSubgroupRow<'a> {
    index: usize,
    order: usize,
    generators: String,
    elements: &'a [Element],
}

fn normal_subgroup_json(subgroups: &[SubgroupSet]) -> String {
    let rows: Vec<NormalSubgroupRow> = subgroups
        .iter()
        .enumerate()
        .map(|(index, h)| NormalSubgroupRow {
            index,
            order: h.order(),
            generators: h.description(),
            elements: h.elements(),
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&rows).expect("serializes");
    s.push('\n');
    s
}

fn normal_subgroup_table(subgroups: &[SubgroupSet]) -> String {
    let mut s = format!("{:<6} {:<6} {:<16} {}\n", "index", "order", "generators", "elements");
    for (i, h) in subgroups.iter().enumerate() {
        let els: Vec<String> = h.elements().iter().map(usize::to_string).collect();
        let _ = writeln!(
            s,
            "{:<6} {:<6} {:<16} {}",
            i,
            h.order(),
            h.description(),
            els.join(",")
        );
    }
    s
}

fn analysis_table(doc: &Analysis) -> String {
    fn opt<T: ToString>(v: &Option<T>) -> String {
        v.as_ref().map_or_else(|| "unknown".to_string(), T::to_string)
    }
    let inv = &doc.invariants;
    let degrees: Vec<String> = inv.degree_sequence.iter().map(usize::to_string).collect();
    let rows = [
        ("group", doc.group.clone()),
        ("subgroup", doc.subgroup.clone()),
        ("vertex_count", inv.vertex_count.to_string()),
        ("edge_count", inv.edge_count.to_string()),
        ("degree_sequence", degrees.join(" ")),
        ("is_connected", inv.is_connected.to_string()),
        ("is_complete", inv.is_complete.to_string()),
        ("is_regular", inv.is_regular.to_string()),
        ("is_bipartite", inv.is_bipartite.to_string()),
        ("is_tree", inv.is_tree.to_string()),
        ("is_eulerian", inv.is_eulerian.to_string()),
        ("girth", inv.girth.to_string()),
        ("clique_number", opt(&inv.clique_number)),
        ("chromatic_number", opt(&inv.chromatic_number)),
        ("vertex_connectivity", opt(&inv.vertex_connectivity)),
        ("is_planar", opt(&inv.is_planar)),
        ("is_perfect", opt(&inv.is_perfect)),
        ("is_hamiltonian", opt(&inv.is_hamiltonian)),
    ];
    let mut s = String::new();
    for (k, v) in rows {
        let _ = writeln!(s, "{k:<20} {v}");
    }
    s
}
