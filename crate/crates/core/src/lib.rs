//! Normal-subgroup-based power graphs of finite groups.
//!
//! Given a finite group `G` and a normal subgroup `H`, the graph `Γ_H(G)` has
//! vertex set `(G \ H) ∪ {e}`, and two distinct vertices `x`, `y` are adjacent
//! when `xH = y^m H` or `yH = x^n H` for some positive `m`, `n`. With `H = {e}`
//! this is the ordinary power graph `Γ(G)`.
//!
//! The crate is organised bottom-up:
//!
//! - [`group`]: Cayley-table groups, named families, `φ`.
//! - [`subgroup`]: generated subgroups, normality, enumeration, quotients.
//! - [`power_graph`]: `Γ(G)`, `Γ*(G)` and `Γ_H(G)` (two independent routes).
//! - [`algorithms`]: exact graph invariants used as oracles.
//! - [`harness`]: closed-form predictions checked against those oracles.
//! - [`cli`]: the `nspg` command-line front end.
//!
//! ```
//! use nspg::group::{make_group, GroupSpec};
//! use nspg::subgroup::generated_subgroup;
//! use nspg::power_graph::nsb_power_graph;
//!
//! let g = make_group(&"Z12".parse::<GroupSpec>()?)?;
//! let h = generated_subgroup(&g, &[6])?;
//! let gamma = nsb_power_graph(&g, &h)?;
//! assert_eq!(gamma.graph.vertex_count(), 11);
//! assert_eq!(gamma.graph.edge_count(), 47);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod algorithms;
pub mod cli;
pub mod error;
pub mod graph;
pub mod group;
pub mod harness;
pub mod power_graph;
pub mod subgroup;

pub use algorithms::{analyze, GraphInvariants, SolverBudget};
pub use error::{GraphError, GroupError, SolverError};
pub use graph::SimpleGraph;
pub use group::{make_group, Element, FiniteGroup, GroupSpec};
pub use subgroup::{QuotientGroup, SubgroupSet};

/// The guide under `book/`, compiled so its examples run as doc-tests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/groups.md")]
    mod groups {}
    #[doc = include_str!("../../../book/src/subgroups.md")]
    mod subgroups {}
    #[doc = include_str!("../../../book/src/power-graphs.md")]
    mod power_graphs {}
    #[doc = include_str!("../../../book/src/invariants.md")]
    mod invariants {}
    #[doc = include_str!("../../../book/src/checks.md")]
    mod checks {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
