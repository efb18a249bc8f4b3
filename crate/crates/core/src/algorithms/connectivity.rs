use std::collections::VecDeque;

use super::basic::is_connected;
use super::{check_budget, SolverBudget};
use crate::error::SolverError;
use crate::graph::SimpleGraph;

/// Vertex connectivity with a minimum separating set when one exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexConnectivity {
    pub kappa: usize,
    /// A minimum vertex cut; empty for complete or disconnected graphs.
    pub cut: Vec<usize>,
}

/// `κ(G)` via Menger: the minimum, over non-adjacent pairs, of the number of
/// internally vertex-disjoint paths, computed as unit-capacity max flow on the
/// split-vertex digraph. Complete graphs give `n - 1`; disconnected give 0.
///
/// Only sources among the first `κ + 1` vertices are tried (Even's argument:
/// some vertex among them avoids a minimum cut, and the cut then separates it
/// from a later vertex).
pub fn vertex_connectivity(
    g: &SimpleGraph,
    budget: &SolverBudget,
) -> Result<VertexConnectivity, SolverError> {
    check_budget("vertex_connectivity", g.vertex_count(), budget.max_exact_vertices)?;
    let n = g.vertex_count();
    if g.is_complete() {
        return Ok(VertexConnectivity {
            kappa: n.saturating_sub(1),
            cut: Vec::new(),
        });
    }
    if !is_connected(g) {
        return Ok(VertexConnectivity {
            kappa: 0,
            cut: Vec::new(),
        });
    }
    let mut best = VertexConnectivity {
        kappa: n - 1,
        cut: Vec::new(),
    };
    let mut i = 0;
    while i <= best.kappa && i < n {
        for j in i + 1..n {
            if g.has_edge(i, j) {
                continue;
            }
            let (flow, cut) = min_vertex_cut(g, i, j, best.kappa);
            if flow < best.kappa || best.cut.is_empty() {
                best = VertexConnectivity { kappa: flow, cut };
            }
        }
        i += 1;
    }
    Ok(best)
}

/// Max number of internally disjoint `s`–`t` paths (stopping once `limit`
/// is reached) and, when below the limit, the matching minimum cut.
pub fn min_vertex_cut(g: &SimpleGraph, s: usize, t: usize, limit: usize) -> (usize, Vec<usize>) {
    let n = g.vertex_count();
    let m = 2 * n;
    let inf = n as i32 + 1;
    let node_in = |v: usize| 2 * v;
    let node_out = |v: usize| 2 * v + 1;
    let mut cap = vec![0i32; m * m];
    for v in 0..n {
        cap[node_in(v) * m + node_out(v)] = if v == s || v == t { inf } else { 1 };
    }
    for (u, v) in g.edges() {
        cap[node_out(u) * m + node_in(v)] = inf;
        cap[node_out(v) * m + node_in(u)] = inf;
    }
    let (source, sink) = (node_out(s), node_in(t));
    let mut flow = 0;
    let mut prev = vec![usize::MAX; m];
    loop {
        prev.fill(usize::MAX);
        prev[source] = source;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            if u == sink {
                break;
            }
            for v in 0..m {
                if prev[v] == usize::MAX && cap[u * m + v] > 0 {
                    prev[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if prev[sink] == usize::MAX {
            break;
        }
        let mut v = sink;
        while v != source {
            let u = prev[v];
            cap[u * m + v] -= 1;
            cap[v * m + u] += 1;
            v = u;
        }
        flow += 1;
        if flow > limit {
            return (flow, Vec::new());
        }
    }
    // prev now marks the residual reachable set
    let cut = (0..n)
        .filter(|&v| prev[node_in(v)] != usize::MAX && prev[node_out(v)] == usize::MAX)
        .collect();
    (flow, cut)
}

/// Articulation points and biconnected components (as edge lists), by
/// Hopcroft–Tarjan low-link DFS.
pub fn biconnected_components(g: &SimpleGraph) -> (Vec<usize>, Vec<Vec<(usize, usize)>>) {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut comps = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut time = 0;
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbour index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(top) = stack.last_mut() {
            let (u, parent) = (top.0, top.1);
            if top.2 < adj[u].len() {
                let w = adj[u][top.2];
                top.2 += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((u, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((w, u, 0));
                } else if w != parent && disc[w] < disc[u] {
                    edge_stack.push((u, w));
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        if p != root {
                            is_cut[p] = true;
                        }
                        let mut comp = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            comp.push((e.0.min(e.1), e.0.max(e.1)));
                            if e == (p, u) {
                                break;
                            }
                        }
                        comp.sort_unstable();
                        comps.push(comp);
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    let cuts = (0..n).filter(|&v| is_cut[v]).collect();
    (cuts, comps)
}
