//! Closed-form predictions about `Γ_H(G)` checked against the exact solvers.
//!
//! Each [`TheoremId`] names one check. For a pair `(G, H)` the check computes
//! a prediction from group data (orders, the quotient `G/H`, invariants of the
//! smaller graph `Γ(G/H)`) and an actual value from `Γ_H(G)` itself, then
//! compares them under the statement's logical form.

use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize, Serializer};

use crate::algorithms::{
    basic_invariants, chromatic_number, clique_number, degree_in_power_graph_formula, girth,
    hamiltonian_cycle, is_perfect, nsb_degree_formula, planarity, vertex_connectivity,
    BasicInvariants, Girth, SolverBudget,
};
use crate::error::{GroupError, SolverError};
use crate::graph::SimpleGraph;
use crate::group::{euler_phi, make_group, Element, FiniteGroup, GroupSpec};
use crate::power_graph::{nsb_power_graph, power_graph, NsbPowerGraph};
use crate::subgroup::{
    all_normal_subgroups, generated_subgroup, quotient, recognize, QuotientGroup, StructureFlags,
    SubgroupSet,
};

/// The checks the harness knows. The string form (`as_str`) is the stable
/// token used on the command line and in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// Complete iff `G/H` is a cyclic p-group.
    CompleteIffCyclicPGroup,
    /// Regular iff complete (the testable form of "is a Cayley graph").
    RegularIffComplete,
    /// Degree formulas for `Γ(G)` and `Γ_H(G)`.
    DegreeFormula,
    /// Eulerian iff `|G| ≡ |H| (mod 2)`.
    EulerianParity,
    /// `Γ(G/H)` Hamiltonian implies `Γ_H(G)` Hamiltonian.
    HamiltonianLift,
    /// Girth 3 for nontrivial `H`.
    GirthThree,
    /// Neither bipartite nor a tree for nontrivial `H`.
    NotBipartiteNorTree,
    /// Planar iff `|H| ∈ {2, 3}` and `G/H` is elementary abelian 2.
    PlanarCharacterization,
    /// Edge count from the edge count of `Γ(G/H)`.
    EdgeCount,
    /// `ω = |H|(M - 1) + 1` with `M = ω(Γ(G/H))`.
    CliqueNumber,
    /// `Γ_H(G)` is perfect.
    Perfect,
    /// `χ = |H|(M - 1) + 1` with `M = ω(Γ(G/H))`.
    ChromaticNumber,
    /// `κ = |H|(k - 1) + 1` with `k = κ(Γ(G/H))`. Report-only.
    VertexConnectivity,
}

impl TheoremId {
    pub const ALL: [TheoremId; 13] = [
        TheoremId::CompleteIffCyclicPGroup,
        TheoremId::RegularIffComplete,
        TheoremId::DegreeFormula,
        TheoremId::EulerianParity,
        TheoremId::HamiltonianLift,
        TheoremId::GirthThree,
        TheoremId::NotBipartiteNorTree,
        TheoremId::PlanarCharacterization,
        TheoremId::EdgeCount,
        TheoremId::CliqueNumber,
        TheoremId::Perfect,
        TheoremId::ChromaticNumber,
        TheoremId::VertexConnectivity,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::CompleteIffCyclicPGroup => "COMPLETE_3_1",
            TheoremId::RegularIffComplete => "CAYLEY_3_3",
            TheoremId::DegreeFormula => "DEGREE_4_1",
            TheoremId::EulerianParity => "EULERIAN_4_2",
            TheoremId::HamiltonianLift => "HAMILTONIAN_4_4",
            TheoremId::GirthThree => "GIRTH_5_3",
            TheoremId::NotBipartiteNorTree => "BIPARTITE_TREE_5_2",
            TheoremId::PlanarCharacterization => "PLANAR_5_4",
            TheoremId::EdgeCount => "EDGES_6_1",
            TheoremId::CliqueNumber => "CLIQUE_6_4",
            TheoremId::Perfect => "PERFECT_6_5",
            TheoremId::ChromaticNumber => "CHROMATIC_6_6",
            TheoremId::VertexConnectivity => "KAPPA_6_7",
        }
    }

    /// Report-only checks record disagreement as FLAGGED instead of FAIL.
    pub fn is_report_only(self) -> bool {
        self == TheoremId::VertexConnectivity
    }

    fn needs_nontrivial_subgroup(self) -> bool {
        matches!(
            self,
            TheoremId::GirthThree
                | TheoremId::NotBipartiteNorTree
                | TheoremId::PlanarCharacterization
                | TheoremId::EdgeCount
        )
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| format!("unknown theorem id `{s}`"))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for TheoremId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A predicted or measured quantity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Bool(bool),
    Int(u64),
    Text(String),
    /// Degree sequences of `Γ(G)` (by element) and `Γ_H(G)` (by vertex).
    Degrees { power: Vec<u64>, nsb: Vec<u64> },
    /// A solver refused; serialized as `null`.
    Unknown,
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn join(v: &[u64]) -> String {
            v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
        }
        match self {
            Value::Bool(b) => write!(f, "{b}"),
            Value::Int(n) => write!(f, "{n}"),
            Value::Text(s) => f.write_str(s),
            Value::Degrees { power, nsb } => {
                write!(f, "power=[{}];nsb=[{}]", join(power), join(nsb))
            }
            Value::Unknown => f.write_str("unknown"),
        }
    }
}

impl From<Girth> for Value {
    fn from(g: Girth) -> Self {
        match g {
            Girth::Finite(n) => Value::Int(n as u64),
            Girth::Infinite => Value::Text("infinite".into()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
    Flagged,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Skipped => "SKIPPED",
            Verdict::Flagged => "FLAGGED",
        })
    }
}

/// One check on one `(G, H)` pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceResult {
    pub theorem: TheoremId,
    pub group: String,
    pub subgroup: String,
    pub hypothesis_met: bool,
    pub predicted: Value,
    pub actual: Value,
    pub verdict: Verdict,
    /// Why the instance was skipped, when it was.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Everything about one pair that more than one check needs, computed at
/// most once.
pub struct Instance {
    h: SubgroupSet,
    q: QuotientGroup,
    gamma: NsbPowerGraph,
    quotient_graph: SimpleGraph,
    flags: StructureFlags,
    budget: SolverBudget,
    basic: OnceCell<BasicInvariants>,
    quotient_clique: OnceCell<Result<usize, SolverError>>,
}

impl Instance {
    pub fn new(g: &FiniteGroup, h: &SubgroupSet, budget: SolverBudget) -> Result<Self, GroupError> {
        let gamma = nsb_power_graph(g, h)?;
        let q = quotient(g, h)?;
        let quotient_graph = power_graph(q.group());
        let flags = recognize(q.group());
        Ok(Self {
            h: h.clone(),
            q,
            gamma,
            quotient_graph,
            flags,
            budget,
            basic: OnceCell::new(),
            quotient_clique: OnceCell::new(),
        })
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.gamma.graph
    }

    fn basic(&self) -> &BasicInvariants {
        self.basic.get_or_init(|| basic_invariants(&self.gamma.graph))
    }

    fn quotient_clique(&self) -> Result<usize, SolverError> {
        self.quotient_clique
            .get_or_init(|| clique_number(&self.quotient_graph, &self.budget).map(|c| c.size))
            .clone()
    }

    fn parent_order(&self) -> u64 {
        self.q.parent().order() as u64
    }

    fn h_order(&self) -> u64 {
        self.h.order() as u64
    }

    /// `|H|(x - 1) + 1`.
    fn blow_up(&self, x: usize) -> u64 {
        self.h_order() * (x as u64).saturating_sub(1) + 1
    }

    pub fn check(&self, id: TheoremId) -> InstanceResult {
        let mut hypothesis_met = !(id.needs_nontrivial_subgroup() && self.h.is_trivial());
        let mut note = (!hypothesis_met).then(|| "hypothesis: H must be nontrivial".to_string());
        let outcome = self.evaluate(id, &mut hypothesis_met, &mut note);
        let (predicted, actual) = match outcome {
            Ok(pair) => pair,
            Err(e) => {
                let message = e.to_string();
                note = Some(match note {
                    Some(n) => format!("{n}; {message}"),
                    None => message,
                });
                return self.result(id, hypothesis_met, Value::Unknown, Value::Unknown, Verdict::Skipped, note);
            }
        };
        let verdict = if !hypothesis_met {
            Verdict::Skipped
        } else if predicted == actual {
            Verdict::Pass
        } else if id.is_report_only() {
            Verdict::Flagged
        } else {
            Verdict::Fail
        };
        self.result(id, hypothesis_met, predicted, actual, verdict, note)
    }

    fn result(
        &self,
        theorem: TheoremId,
        hypothesis_met: bool,
        predicted: Value,
        actual: Value,
        verdict: Verdict,
        note: Option<String>,
    ) -> InstanceResult {
        InstanceResult {
            theorem,
            group: self.gamma.group_name.clone(),
            subgroup: self.gamma.subgroup.clone(),
            hypothesis_met,
            predicted,
            actual,
            verdict,
            note,
        }
    }

    fn evaluate(
        &self,
        id: TheoremId,
        hypothesis_met: &mut bool,
        note: &mut Option<String>,
    ) -> Result<(Value, Value), SolverError> {
        let graph = &self.gamma.graph;
        let budget = &self.budget;
        Ok(match id {
            TheoremId::CompleteIffCyclicPGroup => (
                Value::Bool(self.flags.is_cyclic_p_group_or_trivial),
                Value::Bool(self.basic().is_complete),
            ),
            TheoremId::RegularIffComplete => (
                Value::Bool(self.basic().is_complete),
                Value::Bool(self.basic().is_regular),
            ),
            TheoremId::DegreeFormula => {
                let (predicted, actual) = self.degrees();
                (predicted, actual)
            }
            TheoremId::EulerianParity => (
                Value::Bool(self.parent_order() % 2 == self.h_order() % 2),
                Value::Bool(self.basic().is_eulerian),
            ),
            TheoremId::HamiltonianLift => {
                let lifted = hamiltonian_cycle(&self.quotient_graph, budget)?.is_some();
                if !lifted {
                    *hypothesis_met = false;
                    *note = Some("hypothesis: Γ(G/H) is not Hamiltonian".into());
                }
                (
                    Value::Bool(lifted),
                    Value::Bool(hamiltonian_cycle(graph, budget)?.is_some()),
                )
            }
            TheoremId::GirthThree => (Value::Int(3), girth(graph).into()),
            TheoremId::NotBipartiteNorTree => {
                let b = self.basic();
                (Value::Bool(false), Value::Bool(b.is_bipartite || b.is_tree))
            }
            TheoremId::PlanarCharacterization => (
                Value::Bool(
                    matches!(self.h_order(), 2 | 3) && self.flags.is_elementary_abelian_2,
                ),
                Value::Bool(planarity::is_planar(graph, budget)?.is_planar),
            ),
            TheoremId::EdgeCount => (
                Value::Int(self.predicted_edges()),
                Value::Int(self.basic().edge_count as u64),
            ),
            TheoremId::CliqueNumber => (
                Value::Int(self.blow_up(self.quotient_clique()?)),
                Value::Int(clique_number(graph, budget)?.size as u64),
            ),
            TheoremId::Perfect => (
                Value::Bool(true),
                Value::Bool(is_perfect(graph, budget)?.is_perfect),
            ),
            TheoremId::ChromaticNumber => (
                Value::Int(self.blow_up(self.quotient_clique()?)),
                Value::Int(chromatic_number(graph, budget)?.colors as u64),
            ),
            TheoremId::VertexConnectivity => {
                let k = vertex_connectivity(&self.quotient_graph, budget)?.kappa;
                (
                    Value::Int(self.blow_up(k)),
                    Value::Int(vertex_connectivity(graph, budget)?.kappa as u64),
                )
            }
        })
    }

    /// `(t - n + 1)|H|² + C(|H|, 2)(n - 1) + (|G| - |H|)` where `n = |G/H|`
    /// and `t`, the edge count of `Γ(G/H)`, is `½ Σ (2 o(x) - φ(o(x)) - 1)`
    /// over `x ∈ G/H`.
    fn predicted_edges(&self) -> u64 {
        let qg = self.q.group();
        let n = qg.order() as u64;
        let twice_t: u64 = (0..qg.order())
            .map(|x| {
                let o = qg.element_order(x).expect("in range") as u64;
                2 * o - euler_phi(o).expect("positive order") - 1
            })
            .sum();
        let t = twice_t / 2;
        let h = self.h_order();
        (t + 1 - n) * h * h + h * (h - 1) / 2 * (n - 1) + (self.parent_order() - h)
    }

    fn degrees(&self) -> (Value, Value) {
        let g = self.q.parent();
        let power_actual = power_graph(g).degrees().into_iter().map(|d| d as u64).collect();
        let power_predicted = (0..g.order())
            .map(|v| degree_in_power_graph_formula(g, v).expect("in range"))
            .collect();
        let nsb_actual = self.gamma.graph.degrees().into_iter().map(|d| d as u64).collect();
        let nsb_predicted = self
            .gamma
            .coset_of
            .iter()
            .map(|&c| nsb_degree_formula(&self.q, c).expect("in range"))
            .collect();
        (
            Value::Degrees {
                power: power_predicted,
                nsb: nsb_predicted,
            },
            Value::Degrees {
                power: power_actual,
                nsb: nsb_actual,
            },
        )
    }
}

/// Runs one check with the default solver budget.
pub fn check_theorem(
    id: TheoremId,
    g: &FiniteGroup,
    h: &SubgroupSet,
) -> Result<InstanceResult, GroupError> {
    Ok(Instance::new(g, h, SolverBudget::default())?.check(id))
}

/// How a catalog entry picks subgroups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubgroupSelection {
    /// Every normal subgroup except `G` itself, `{e}` included.
    AllNormal,
    List(Vec<SubgroupSelector>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubgroupSelector {
    /// The subgroup generated by these element indices.
    Generators(Vec<Element>),
    /// Position in the normal-subgroup enumeration.
    Index(usize),
}

impl SubgroupSelector {
    pub fn resolve(&self, g: &FiniteGroup) -> Result<SubgroupSet, GroupError> {
        let h = match self {
            SubgroupSelector::Generators(gens) => generated_subgroup(g, gens)?,
            SubgroupSelector::Index(k) => {
                let all = all_normal_subgroups(g)?;
                let count = all.len();
                all.into_iter().nth(*k).ok_or_else(|| {
                    GroupError::InvalidParameter(format!(
                        "subgroup index {k} out of range ({count} normal subgroups)"
                    ))
                })?
            }
        };
        if !h.is_normal() {
            return Err(GroupError::NotNormal(h.description()));
        }
        if h.is_whole() {
            return Err(GroupError::WholeGroup);
        }
        Ok(h)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogInstance {
    pub group: GroupSpec,
    pub subgroups: SubgroupSelection,
}

impl CatalogInstance {
    /// The group and its selected subgroups, in selection order.
    pub fn resolve(&self) -> Result<(FiniteGroup, Vec<SubgroupSet>), GroupError> {
        let g = make_group(&self.group)?;
        let hs = match &self.subgroups {
            SubgroupSelection::AllNormal => all_normal_subgroups(&g)?
                .into_iter()
                .filter(|h| !h.is_whole())
                .collect(),
            SubgroupSelection::List(sels) => {
                sels.iter().map(|s| s.resolve(&g)).collect::<Result<_, _>>()?
            }
        };
        Ok((g, hs))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    pub instances: Vec<CatalogInstance>,
    pub budget: SolverBudget,
    pub theorems: Vec<TheoremId>,
}

impl Catalog {
    /// Parses `{"instances": [{"group": "Z12", "subgroups": "all-normal" |
    /// [selector, ...]}], "theorems": [id, ...]}`. A selector is either an
    /// array of generator indices or `{"index": k}`. `theorems` defaults to
    /// all checks.
    pub fn from_json(text: &str) -> Result<Self, String> {
        let raw: RawCatalog = serde_json::from_str(text).map_err(|e| e.to_string())?;
        let mut instances = Vec::with_capacity(raw.instances.len());
        for inst in raw.instances {
            let group: GroupSpec = inst.group.parse().map_err(|e: GroupError| e.to_string())?;
            let subgroups = match inst.subgroups {
                RawSelection::Keyword(k) if k == "all-normal" => SubgroupSelection::AllNormal,
                RawSelection::Keyword(k) => {
                    return Err(format!("unknown subgroup keyword `{k}`"));
                }
                RawSelection::List(list) => SubgroupSelection::List(
                    list.into_iter()
                        .map(|s| match s {
                            RawSelector::Generators(g) => SubgroupSelector::Generators(g),
                            RawSelector::Index { index } => SubgroupSelector::Index(index),
                        })
                        .collect(),
                ),
            };
            instances.push(CatalogInstance { group, subgroups });
        }
        Ok(Catalog {
            instances,
            budget: SolverBudget::default(),
            theorems: raw.theorems.unwrap_or_else(|| TheoremId::ALL.to_vec()),
        })
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCatalog {
    instances: Vec<RawInstance>,
    theorems: Option<Vec<TheoremId>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInstance {
    group: String,
    subgroups: RawSelection,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawSelection {
    Keyword(String),
    List(Vec<RawSelector>),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawSelector {
    Generators(Vec<Element>),
    Index { index: usize },
}

/// Group specs of the default catalog, in run order.
pub fn default_catalog_groups() -> Vec<GroupSpec> {
    use GroupSpec::*;
    let mut specs: Vec<GroupSpec> = (1..=24).map(Cyclic).collect();
    specs.extend((3..=8).map(Dihedral));
    specs.extend((2..=4).map(|k| ElementaryAbelian { p: 2, k }));
    specs.push(ElementaryAbelian { p: 3, k: 2 });
    for (a, b) in [(2, 4), (2, 6), (3, 3), (4, 4)] {
        specs.push(DirectProduct(vec![Cyclic(a), Cyclic(b)]));
    }
    specs.extend([Quaternion8, Symmetric(3), Symmetric(4)]);
    specs
}

/// Every default group paired with each of its normal subgroups other than
/// the whole group (so `{e}` is included), all checks, default budget.
pub fn default_catalog() -> Catalog {
    Catalog {
        instances: default_catalog_groups()
            .into_iter()
            .map(|group| CatalogInstance {
                group,
                subgroups: SubgroupSelection::AllNormal,
            })
            .collect(),
        budget: SolverBudget::default(),
        theorems: TheoremId::ALL.to_vec(),
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub flagged: usize,
    pub skipped: usize,
}

impl Tally {
    fn add(&mut self, v: Verdict) {
        match v {
            Verdict::Pass => self.pass += 1,
            Verdict::Fail => self.fail += 1,
            Verdict::Flagged => self.flagged += 1,
            Verdict::Skipped => self.skipped += 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremSummary {
    pub theorem: TheoremId,
    #[serde(flatten)]
    pub counts: Tally,
}

/// The connectivity check split by whether `Γ_H(G)` is complete.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct KappaBreakdown {
    pub complete: Tally,
    pub non_complete: Tally,
}

/// A catalog entry that could not be turned into `(G, H)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogError {
    pub group: String,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    /// Number of `(G, H)` pairs checked.
    pub instances: usize,
    pub theorems: Vec<TheoremId>,
    pub summary: Vec<TheoremSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa: Option<KappaBreakdown>,
    pub errors: Vec<CatalogError>,
    pub non_pass: Vec<InstanceResult>,
    pub results: Vec<InstanceResult>,
}

impl Report {
    pub fn has_failures(&self) -> bool {
        self.results.iter().any(|r| r.verdict == Verdict::Fail) || !self.errors.is_empty()
    }

    pub fn tally(&self, id: TheoremId) -> Option<&Tally> {
        self.summary.iter().find(|s| s.theorem == id).map(|s| &s.counts)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One row per result: theorem, group, subgroup, hypothesis_met,
    /// predicted, actual, verdict.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "theorem",
            "group",
            "subgroup",
            "hypothesis_met",
            "predicted",
            "actual",
            "verdict",
        ])
        .expect("write to memory");
        for r in &self.results {
            w.write_record([
                r.theorem.as_str(),
                &r.group,
                &r.subgroup,
                if r.hypothesis_met { "true" } else { "false" },
                &r.predicted.to_string(),
                &r.actual.to_string(),
                &r.verdict.to_string(),
            ])
            .expect("write to memory");
        }
        String::from_utf8(w.into_inner().expect("flush to memory")).expect("CSV is UTF-8")
    }
}

/// Checks every selected theorem on every pair of the catalog. Pairs run in
/// parallel; results keep catalog order, then theorem order.
pub fn run_catalog(cat: &Catalog) -> Report {
    let mut theorems = cat.theorems.clone();
    theorems.sort();
    theorems.dedup();

    let mut errors = Vec::new();
    let mut pairs = Vec::new();
    for inst in &cat.instances {
        match inst.resolve() {
            Ok((g, hs)) => pairs.extend(hs.into_iter().map(|h| (g.clone(), h))),
            Err(e) => errors.push(CatalogError {
                group: inst.group.to_string(),
                message: e.to_string(),
            }),
        }
    }

    let per_pair: Vec<Result<(Vec<InstanceResult>, bool), CatalogError>> = pairs
        .par_iter()
        .map(|(g, h)| {
            let inst = Instance::new(g, h, cat.budget).map_err(|e| CatalogError {
                group: g.name().to_string(),
                message: e.to_string(),
            })?;
            let results = theorems.iter().map(|&id| inst.check(id)).collect();
            Ok((results, inst.basic().is_complete))
        })
        .collect();

    let mut report = Report {
        theorems: theorems.clone(),
        summary: theorems
            .iter()
            .map(|&theorem| TheoremSummary {
                theorem,
                counts: Tally::default(),
            })
            .collect(),
        kappa: theorems
            .contains(&TheoremId::VertexConnectivity)
            .then(KappaBreakdown::default),
        ..Report::default()
    };
    for item in per_pair {
        let (results, complete) = match item {
            Ok(x) => x,
            Err(e) => {
                errors.push(e);
                continue;
            }
        };
        report.instances += 1;
        for r in results {
            let slot = theorems.binary_search(&r.theorem).expect("selected theorem");
            report.summary[slot].counts.add(r.verdict);
            if r.theorem == TheoremId::VertexConnectivity {
                if let Some(k) = report.kappa.as_mut() {
                    if complete { &mut k.complete } else { &mut k.non_complete }.add(r.verdict);
                }
            }
            if r.verdict != Verdict::Pass {
                report.non_pass.push(r.clone());
            }
            report.results.push(r);
        }
    }
    report.errors = errors;
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(spec: &str, gens: &[Element]) -> (FiniteGroup, SubgroupSet) {
        let g = make_group(&spec.parse().unwrap()).unwrap();
        let h = generated_subgroup(&g, gens).unwrap();
        (g, h)
    }

    #[test]
    fn ids_round_trip() {
        for id in TheoremId::ALL {
            assert_eq!(id.as_str().parse::<TheoremId>(), Ok(id));
        }
        assert!("EULERIAN".parse::<TheoremId>().is_err());
        assert_eq!(TheoremId::ALL.iter().filter(|t| t.is_report_only()).count(), 1);
    }

    #[test]
    fn examples() {
        let (g, h) = pair("Z4", &[2]);
        let r = check_theorem(TheoremId::EulerianParity, &g, &h).unwrap();
        assert_eq!((r.predicted.clone(), r.actual.clone()), (Value::Bool(true), Value::Bool(true)));
        assert_eq!(r.verdict, Verdict::Pass);
        let r = check_theorem(TheoremId::VertexConnectivity, &g, &h).unwrap();
        assert_eq!((r.predicted, r.actual), (Value::Int(1), Value::Int(2)));
        assert_eq!(r.verdict, Verdict::Flagged);
        let r = check_theorem(TheoremId::EdgeCount, &g, &h).unwrap();
        assert_eq!((r.predicted, r.actual, r.verdict), (Value::Int(3), Value::Int(3), Verdict::Pass));

        let (g, h) = pair("Z8", &[2]);
        let r = check_theorem(TheoremId::PlanarCharacterization, &g, &h).unwrap();
        assert_eq!((r.predicted, r.actual), (Value::Bool(false), Value::Bool(false)));
        assert_eq!(r.verdict, Verdict::Pass);
    }

    #[test]
    fn hypotheses() {
        let (g, h) = pair("Z6", &[]);
        let r = check_theorem(TheoremId::GirthThree, &g, &h).unwrap();
        assert!(!r.hypothesis_met);
        assert_eq!(r.verdict, Verdict::Skipped);
        assert!(r.note.is_some());
        // Z6/{e}: Γ(Z6) is Hamiltonian, so the lift check applies
        let r = check_theorem(TheoremId::HamiltonianLift, &g, &h).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);

        let d4 = make_group(&GroupSpec::Dihedral(4)).unwrap();
        let center = all_normal_subgroups(&d4)
            .unwrap()
            .into_iter()
            .find(|h| h.order() == 2)
            .unwrap();
        let r = check_theorem(TheoremId::HamiltonianLift, &d4, &center).unwrap();
        assert_eq!((r.hypothesis_met, r.verdict), (false, Verdict::Skipped));
        assert_eq!((r.predicted, r.actual), (Value::Bool(false), Value::Bool(false)));
    }

    #[test]
    fn budget_refusal_is_skipped() {
        let (g, h) = pair("Z12", &[6]);
        let tiny = SolverBudget {
            max_exact_vertices: 3,
            ..SolverBudget::default()
        };
        let r = Instance::new(&g, &h, tiny).unwrap().check(TheoremId::CliqueNumber);
        assert_eq!(r.verdict, Verdict::Skipped);
        assert_eq!(r.actual, Value::Unknown);
        assert!(r.note.unwrap().contains("budget"));
    }

    #[test]
    fn catalog_runs() {
        let empty = Catalog {
            instances: vec![],
            budget: SolverBudget::default(),
            theorems: TheoremId::ALL.to_vec(),
        };
        let r = run_catalog(&empty);
        assert!(r.results.is_empty() && r.instances == 0);

        let cat = Catalog::from_json(r#"{"instances":[{"group":"Z4","subgroups":[[2]]}]}"#).unwrap();
        let r = run_catalog(&cat);
        assert_eq!(r.results.len(), 13);
        let edges = r.results.iter().find(|x| x.theorem == TheoremId::EdgeCount).unwrap();
        assert_eq!((&edges.predicted, &edges.actual), (&Value::Int(3), &Value::Int(3)));
        assert_eq!(r.kappa.as_ref().unwrap().complete.flagged, 1);
        assert!(!r.has_failures());
    }

    #[test]
    fn catalog_json_errors() {
        assert!(Catalog::from_json("{}").is_err());
        assert!(Catalog::from_json(r#"{"instances":[{"group":"Z0x","subgroups":"all-normal"}]}"#).is_err());
        assert!(Catalog::from_json(r#"{"instances":[{"group":"Z4","subgroups":"some"}]}"#).is_err());
        assert!(Catalog::from_json(r#"{"instances":[],"theorems":["NOPE"]}"#).is_err());
        let c = Catalog::from_json(
            r#"{"instances":[{"group":"S3","subgroups":[{"index":1},[1]]}],"theorems":["GIRTH_5_3"]}"#,
        )
        .unwrap();
        assert_eq!(c.theorems, vec![TheoremId::GirthThree]);
        let SubgroupSelection::List(sels) = &c.instances[0].subgroups else {
            panic!("expected a list")
        };
        assert_eq!(sels[0], SubgroupSelector::Index(1));
        assert_eq!(sels[1], SubgroupSelector::Generators(vec![1]));
    }

    #[test]
    fn default_catalog_contents() {
        let cat = default_catalog();
        let mut pairs = Vec::new();
        for inst in &cat.instances {
            let (g, hs) = inst.resolve().unwrap();
            for h in hs {
                pairs.push((g.name().to_string(), h.elements().to_vec(), h.order()));
            }
        }
        assert!(pairs.len() >= 50);
        assert!(pairs.iter().any(|(n, e, _)| n == "Z4" && e == &[0, 2]));
        assert!(pairs.iter().any(|(n, _, o)| n == "Z6" && *o == 1));
        let s3: Vec<usize> = pairs.iter().filter(|(n, _, _)| n == "S3").map(|p| p.2).collect();
        assert_eq!(s3, vec![1, 3]);
    }
}
