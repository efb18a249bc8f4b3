//! Exact graph invariants.
//!
//! Every quantity is computed from the graph alone, with no group theory, so
//! the results can serve as an oracle for closed-form predictions. Solvers
//! whose cost grows exponentially take a [`SolverBudget`] and refuse with a
//! [`SolverError`] instead of approximating.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::SolverError;
use crate::graph::SimpleGraph;

pub mod basic;
pub mod clique;
pub mod coloring;
pub mod connectivity;
pub mod degree;
pub mod girth;
pub mod hamiltonian;
pub mod perfect;
pub mod planarity;

pub use basic::{basic_invariants, eulerian_circuit, BasicInvariants};
pub use clique::{clique_number, Clique};
pub use coloring::{chromatic_number, Coloring};
pub use connectivity::{biconnected_components, vertex_connectivity, VertexConnectivity};
pub use degree::{degree_in_power_graph_formula, nsb_degree_formula};
pub use girth::{girth, Girth};
pub use hamiltonian::hamiltonian_cycle;
pub use perfect::{find_odd_hole, is_perfect, Perfection};
pub use planarity::{is_planar, Kuratowski, KuratowskiKind, Planarity};

/// Limits for the exponential-time solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverBudget {
    /// Largest vertex count for clique, colouring, connectivity, planarity
    /// and Hamiltonian search.
    pub max_exact_vertices: usize,
    /// Largest vertex count for the odd-hole search.
    pub max_odd_hole_vertices: usize,
    /// Node limit for the Hamiltonian backtracking search.
    pub max_hamiltonian_steps: u64,
}

impl Default for SolverBudget {
    fn default() -> Self {
        Self {
            max_exact_vertices: 64,
            max_odd_hole_vertices: 24,
            max_hamiltonian_steps: 20_000_000,
        }
    }
}

impl fmt::Display for SolverBudget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "exact={},odd_hole={},steps={}",
            self.max_exact_vertices, self.max_odd_hole_vertices, self.max_hamiltonian_steps
        )
    }
}

/// Accepts a bare positive integer (the exact-solver vertex limit) or a
/// comma-separated list of `exact=N`, `odd_hole=N`, `steps=N`. Keys not given
/// keep their defaults.
impl FromStr for SolverBudget {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        fn positive<T: FromStr + Default + PartialEq>(v: &str) -> Result<T, String> {
            match v.parse::<T>() {
                Ok(n) if n != T::default() => Ok(n),
                _ => Err(format!("budget value `{v}` is not a positive integer")),
            }
        }
        let mut budget = Self::default();
        if !s.contains('=') {
            budget.max_exact_vertices = positive(s)?;
            return Ok(budget);
        }
        for part in s.split(',') {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| format!("budget entry `{part}` is not key=value"))?;
            match key {
                "exact" => budget.max_exact_vertices = positive(value)?,
                "odd_hole" => budget.max_odd_hole_vertices = positive(value)?,
                "steps" => budget.max_hamiltonian_steps = positive(value)?,
                _ => return Err(format!("unknown budget key `{key}`")),
            }
        }
        Ok(budget)
    }
}

pub(crate) fn check_budget(
    solver: &'static str,
    vertices: usize,
    limit: usize,
) -> Result<(), SolverError> {
    if vertices > limit {
        return Err(SolverError::VertexBudget {
            solver,
            vertices,
            limit,
        });
    }
    Ok(())
}

/// All invariants of one graph. Solver-backed fields are `None` when the
/// solver refused; the reasons are listed in `budget_exceeded`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphInvariants {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub degree_sequence: Vec<usize>,
    pub is_connected: bool,
    pub is_complete: bool,
    pub is_regular: bool,
    pub is_bipartite: bool,
    pub is_tree: bool,
    pub is_eulerian: bool,
    pub girth: Girth,
    pub clique_number: Option<usize>,
    pub chromatic_number: Option<usize>,
    pub vertex_connectivity: Option<usize>,
    pub is_planar: Option<bool>,
    pub is_perfect: Option<bool>,
    pub is_hamiltonian: Option<bool>,
    pub budget_exceeded: Vec<String>,
    pub witnesses: Witnesses,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clique: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coloring: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hamiltonian_cycle: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex_cut: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kuratowski: Option<Kuratowski>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub odd_hole: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eulerian_circuit: Option<Vec<usize>>,
}

impl GraphInvariants {
    /// True when some solver refused for budget reasons.
    pub fn is_partial(&self) -> bool {
        !self.budget_exceeded.is_empty()
    }
}

/// Computes every invariant, running each solver independently so one
/// refusal does not hide the others.
pub fn analyze(g: &SimpleGraph, budget: &SolverBudget) -> GraphInvariants {
    let basic = basic_invariants(g);
    let mut exceeded = Vec::new();
    let mut witnesses = Witnesses {
        eulerian_circuit: if basic.is_eulerian && basic.edge_count > 0 {
            eulerian_circuit(g)
        } else {
            None
        },
        ..Witnesses::default()
    };
    let mut keep = |r: Result<(), SolverError>| {
        if let Err(e) = r {
            exceeded.push(e.to_string());
        }
    };

    let mut clique = None;
    keep(clique_number(g, budget).map(|c| {
        clique = Some(c.size);
        witnesses.clique = Some(c.witness);
    }));
    let mut chromatic = None;
    keep(chromatic_number(g, budget).map(|c| {
        chromatic = Some(c.colors);
        witnesses.coloring = Some(c.witness);
    }));
    let mut kappa = None;
    keep(vertex_connectivity(g, budget).map(|k| {
        kappa = Some(k.kappa);
        if !k.cut.is_empty() {
            witnesses.vertex_cut = Some(k.cut);
        }
    }));
    let mut planar = None;
    keep(is_planar(g, budget).map(|p| {
        planar = Some(p.is_planar);
        witnesses.kuratowski = p.witness;
    }));
    let mut perfect = None;
    keep(is_perfect(g, budget).map(|p| {
        perfect = Some(p.is_perfect);
        witnesses.odd_hole = p.odd_hole;
    }));
    let mut hamiltonian = None;
    keep(hamiltonian_cycle(g, budget).map(|c| {
        hamiltonian = Some(c.is_some());
        witnesses.hamiltonian_cycle = c;
    }));

    GraphInvariants {
        vertex_count: basic.vertex_count,
        edge_count: basic.edge_count,
        degree_sequence: basic.degree_sequence,
        is_connected: basic.is_connected,
        is_complete: basic.is_complete,
        is_regular: basic.is_regular,
        is_bipartite: basic.is_bipartite,
        is_tree: basic.is_tree,
        is_eulerian: basic.is_eulerian,
        girth: girth(g),
        clique_number: clique,
        chromatic_number: chromatic,
        vertex_connectivity: kappa,
        is_planar: planar,
        is_perfect: perfect,
        is_hamiltonian: hamiltonian,
        budget_exceeded: exceeded,
        witnesses,
    }
}
