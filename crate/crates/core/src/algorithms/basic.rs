use std::collections::VecDeque;

use serde::Serialize;

use crate::graph::SimpleGraph;

/// The cheap invariants: everything decidable by a scan or a BFS.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasicInvariants {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub degree_sequence: Vec<usize>,
    pub is_connected: bool,
    pub is_complete: bool,
    pub is_regular: bool,
    pub is_bipartite: bool,
    pub is_tree: bool,
    pub is_eulerian: bool,
}

pub fn basic_invariants(g: &SimpleGraph) -> BasicInvariants {
    let n = g.vertex_count();
    let degrees = g.degrees();
    let edge_count = g.edge_count();
    let is_connected = is_connected(g);
    BasicInvariants {
        vertex_count: n,
        edge_count,
        is_connected,
        is_complete: g.is_complete(),
        is_regular: degrees.windows(2).all(|w| w[0] == w[1]),
        is_bipartite: two_coloring(g).is_some(),
        is_tree: is_connected && n > 0 && edge_count == n - 1,
        is_eulerian: is_eulerian(g),
        degree_sequence: degrees,
    }
}

/// Connected component id of every vertex, numbered in order of first vertex.
pub fn components(g: &SimpleGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = next;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if comp[v] == usize::MAX {
                    comp[v] = next;
                    queue.push_back(v);
                }
            }
        }
        next += 1;
    }
    comp
}

/// The empty graph counts as connected.
pub fn is_connected(g: &SimpleGraph) -> bool {
    components(g).iter().all(|&c| c == 0)
}

/// A proper 2-colouring, if one exists.
pub fn two_coloring(g: &SimpleGraph) -> Option<Vec<u8>> {
    let n = g.vertex_count();
    let mut color = vec![u8::MAX; n];
    for s in 0..n {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if color[v] == u8::MAX {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if color[v] == color[u] {
                    return None;
                }
            }
        }
    }
    Some(color)
}

/// Connected with every degree even; a single vertex qualifies.
pub fn is_eulerian(g: &SimpleGraph) -> bool {
    is_connected(g) && (0..g.vertex_count()).all(|v| g.degree(v).is_multiple_of(2))
}

/// A closed trail through every edge (Hierholzer), as a vertex sequence that
/// starts and ends at the same vertex. `None` unless [`is_eulerian`].
pub fn eulerian_circuit(g: &SimpleGraph) -> Option<Vec<usize>> {
    if !is_eulerian(g) {
        return None;
    }
    let n = g.vertex_count();
    if n == 0 {
        return Some(Vec::new());
    }
    let mut remaining: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut used = std::collections::HashSet::new();
    let mut stack = vec![0usize];
    let mut circuit = Vec::with_capacity(g.edge_count() + 1);
    while let Some(&u) = stack.last() {
        let mut advanced = false;
        while let Some(v) = remaining[u].pop() {
            if used.insert((u.min(v), u.max(v))) {
                stack.push(v);
                advanced = true;
                break;
            }
        }
        if !advanced {
            circuit.push(u);
            stack.pop();
        }
    }
    circuit.reverse();
    Some(circuit)
}
