use super::clique::clique_number;
use super::{check_budget, SolverBudget};
use crate::error::SolverError;
use crate::graph::SimpleGraph;

/// Chromatic number with a proper colouring as witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub colors: usize,
    /// Colour of each vertex, in `0..colors`.
    pub witness: Vec<usize>,
}

/// Exact chromatic number.
///
/// Lower bound `ω`, upper bound from greedy DSATUR; then each `k` from the
/// lower bound upwards is tried with an exact DSATUR backtracking search until
/// one succeeds.
pub fn chromatic_number(g: &SimpleGraph, budget: &SolverBudget) -> Result<Coloring, SolverError> {
    check_budget("chromatic_number", g.vertex_count(), budget.max_exact_vertices)?;
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Coloring {
            colors: 0,
            witness: Vec::new(),
        });
    }
    let lower = clique_number(g, budget)?.size;
    let mut best = greedy_dsatur(g);
    let mut upper = best.iter().max().map_or(0, |m| m + 1);
    for k in lower..upper {
        let mut colors = vec![usize::MAX; n];
        if color_with(g, k, &mut colors) {
            best = colors;
            upper = k;
            break;
        }
    }
    Ok(Coloring {
        colors: upper,
        witness: best,
    })
}

/// Uncoloured vertex with the most distinct neighbour colours, ties by degree
/// into the uncoloured part, then lowest index.
fn pick_vertex(g: &SimpleGraph, colors: &[usize]) -> Option<usize> {
    let n = g.vertex_count();
    (0..n)
        .filter(|&v| colors[v] == usize::MAX)
        .max_by_key(|&v| {
            let mut seen: Vec<usize> = g
                .neighbors(v)
                .filter_map(|u| (colors[u] != usize::MAX).then_some(colors[u]))
                .collect();
            seen.sort_unstable();
            seen.dedup();
            let free_degree = g.neighbors(v).filter(|&u| colors[u] == usize::MAX).count();
            (seen.len(), free_degree, std::cmp::Reverse(v))
        })
}

fn greedy_dsatur(g: &SimpleGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut colors = vec![usize::MAX; n];
    while let Some(v) = pick_vertex(g, &colors) {
        let c = (0..)
            .find(|&c| g.neighbors(v).all(|u| colors[u] != c))
            .expect("some colour is free");
        colors[v] = c;
    }
    colors
}

/// Backtracking k-colouring in DSATUR order. New colours are opened one at a
/// time so colour permutations are not re-explored.
fn color_with(g: &SimpleGraph, k: usize, colors: &mut [usize]) -> bool {
    let Some(v) = pick_vertex(g, colors) else {
        return true;
    };
    let used = colors.iter().filter(|&&c| c != usize::MAX).max().map_or(0, |m| m + 1);
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).all(|u| colors[u] != c) {
            colors[v] = c;
            if color_with(g, k, colors) {
                return true;
            }
            colors[v] = usize::MAX;
        }
    }
    false
}
