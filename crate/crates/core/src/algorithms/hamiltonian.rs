use fixedbitset::FixedBitSet;

use super::basic::is_connected;
use super::connectivity::biconnected_components;
use super::{check_budget, SolverBudget};
use crate::error::SolverError;
use crate::graph::SimpleGraph;

/// A Hamiltonian cycle as a vertex sequence starting at vertex 0 (the closing
/// edge back to 0 is implied), or `None` when none exists.
///
/// Graphs with fewer than three vertices have no Hamiltonian cycle. A graph
/// with a vertex of degree below 2, more than one component or a cut vertex is
/// rejected before searching; otherwise a backtracking search runs with
/// dead-end and reachability pruning. Exceeding the step budget is an error,
/// never a guess.
pub fn hamiltonian_cycle(
    g: &SimpleGraph,
    budget: &SolverBudget,
) -> Result<Option<Vec<usize>>, SolverError> {
    check_budget("hamiltonian_cycle", g.vertex_count(), budget.max_exact_vertices)?;
    let n = g.vertex_count();
    if n < 3 || (0..n).any(|v| g.degree(v) < 2) || !is_connected(g) {
        return Ok(None);
    }
    if !biconnected_components(g).0.is_empty() {
        return Ok(None);
    }
    let mut search = Search {
        g,
        path: vec![0],
        visited: FixedBitSet::with_capacity(n),
        steps: 0,
        limit: budget.max_hamiltonian_steps,
    };
    search.visited.insert(0);
    if search.extend()? {
        Ok(Some(search.path))
    } else {
        Ok(None)
    }
}

struct Search<'a> {
    g: &'a SimpleGraph,
    path: Vec<usize>,
    visited: FixedBitSet,
    steps: u64,
    limit: u64,
}

impl Search<'_> {
    fn extend(&mut self) -> Result<bool, SolverError> {
        self.steps += 1;
        if self.steps > self.limit {
            return Err(SolverError::StepBudget {
                solver: "hamiltonian_cycle",
                limit: self.limit,
            });
        }
        let n = self.g.vertex_count();
        let end = *self.path.last().expect("path starts at 0");
        if self.path.len() == n {
            return Ok(self.g.has_edge(end, 0));
        }
        if !self.feasible(end) {
            return Ok(false);
        }
        let mut next: Vec<usize> = self
            .g
            .neighbors(end)
            .filter(|&v| !self.visited.contains(v))
            .collect();
        // fewest onward options first
        next.sort_by_key(|&v| {
            self.g
                .neighbors(v)
                .filter(|&w| !self.visited.contains(w))
                .count()
        });
        for v in next {
            self.visited.insert(v);
            self.path.push(v);
            if self.extend()? {
                return Ok(true);
            }
            self.path.pop();
            self.visited.set(v, false);
        }
        Ok(false)
    }

    /// Every unvisited vertex needs two usable neighbours (unvisited, the
    /// current end, or the start) and must be reachable from the end through
    /// unvisited vertices.
    fn feasible(&self, end: usize) -> bool {
        let n = self.g.vertex_count();
        let mut open = self.visited.clone();
        open.toggle_range(..);
        let mut usable = open.clone();
        usable.insert(end);
        usable.insert(0);
        for v in open.ones() {
            if self.g.neighbor_set(v).intersection_count(&usable) < 2 {
                return false;
            }
        }
        let mut reached = FixedBitSet::with_capacity(n);
        let mut stack = vec![end];
        let mut count = 0;
        while let Some(u) = stack.pop() {
            for w in self.g.neighbors(u) {
                if open.contains(w) && !reached.contains(w) {
                    reached.insert(w);
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == open.count_ones(..)
    }
}
