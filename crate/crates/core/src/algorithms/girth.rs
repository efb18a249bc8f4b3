use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::graph::SimpleGraph;

/// Length of a shortest cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    /// The graph is a forest.
    Infinite,
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(n) => write!(f, "{n}"),
            Girth::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(n) => s.serialize_u64(*n as u64),
            Girth::Infinite => s.serialize_str("infinite"),
        }
    }
}

/// BFS from every vertex; each non-tree edge `(u, w)` closes a closed walk of
/// length `d(u) + d(w) + 1`, and the minimum over all roots is the girth.
pub fn girth(g: &SimpleGraph) -> Girth {
    let n = g.vertex_count();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(girth(&SimpleGraph::complete(3)), Girth::Finite(3));
        assert_eq!(girth(&SimpleGraph::cycle(7)), Girth::Finite(7));
        let star = SimpleGraph::from_edges(
            (0..5).map(|i| i.to_string()).collect(),
            [(0, 1), (0, 2), (0, 3), (3, 4)],
        )
        .unwrap();
        assert_eq!(girth(&star), Girth::Infinite);
        assert_eq!(girth(&SimpleGraph::with_vertices(0)), Girth::Infinite);
        // Petersen graph
        let mut p = SimpleGraph::with_vertices(10);
        for i in 0..5 {
            p.add_edge(i, (i + 1) % 5).unwrap();
            p.add_edge(i, i + 5).unwrap();
            p.add_edge(5 + i, 5 + (i + 2) % 5).unwrap();
        }
        assert_eq!(girth(&p), Girth::Finite(5));
        assert_eq!(serde_json::to_string(&Girth::Infinite).unwrap(), "\"infinite\"");
    }
}
