use fixedbitset::FixedBitSet;

use super::{check_budget, SolverBudget};
use crate::error::SolverError;
use crate::graph::SimpleGraph;

/// A maximum clique and its size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clique {
    pub size: usize,
    /// Sorted vertex indices.
    pub witness: Vec<usize>,
}

/// Exact clique number by Bron–Kerbosch with Tomita pivoting and a size bound.
///
/// The empty graph has clique number 0.
pub fn clique_number(g: &SimpleGraph, budget: &SolverBudget) -> Result<Clique, SolverError> {
    check_budget("clique_number", g.vertex_count(), budget.max_exact_vertices)?;
    let n = g.vertex_count();
    let mut search = Search {
        g,
        best: Vec::new(),
        current: Vec::new(),
    };
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    search.expand(all, FixedBitSet::with_capacity(n));
    let mut witness = search.best;
    witness.sort_unstable();
    Ok(Clique {
        size: witness.len(),
        witness,
    })
}

struct Search<'a> {
    g: &'a SimpleGraph,
    best: Vec<usize>,
    current: Vec<usize>,
}

impl Search<'_> {
    fn expand(&mut self, mut candidates: FixedBitSet, mut excluded: FixedBitSet) {
        let remaining = candidates.count_ones(..);
        if remaining == 0 {
            if excluded.is_clear() && self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return;
        }
        if self.current.len() + remaining <= self.best.len() {
            return;
        }
        // pivot maximising |P ∩ N(u)| over P ∪ X
        let pivot = candidates
            .ones()
            .chain(excluded.ones())
            .max_by_key(|&u| candidates.intersection_count(self.g.neighbor_set(u)))
            .expect("P is non-empty");
        let mut branch = candidates.clone();
        branch.difference_with(self.g.neighbor_set(pivot));
        for v in branch.ones() {
            let nv = self.g.neighbor_set(v);
            let mut p = candidates.clone();
            p.intersect_with(nv);
            let mut x = excluded.clone();
            x.intersect_with(nv);
            self.current.push(v);
            self.expand(p, x);
            self.current.pop();
            candidates.set(v, false);
            excluded.insert(v);
            if self.current.len() + candidates.count_ones(..) <= self.best.len() {
                return;
            }
        }
    }
}
