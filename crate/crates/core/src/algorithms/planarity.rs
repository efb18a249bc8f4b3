//! Planarity by path addition (Demoucron–Malgrange–Pertuiset) on each
//! biconnected block, with a Kuratowski subgraph extracted on rejection.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::Serialize;

use super::connectivity::biconnected_components;
use super::{check_budget, SolverBudget};
use crate::error::SolverError;
use crate::graph::SimpleGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A subdivision of `K5` or `K3,3` contained in a non-planar graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Kuratowski {
    pub kind: KuratowskiKind,
    /// Vertices of degree at least 3 in the subdivision.
    pub branch_vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Planarity {
    pub is_planar: bool,
    pub witness: Option<Kuratowski>,
}

/// Exact planarity test; non-planar graphs come with a Kuratowski witness.
pub fn is_planar(g: &SimpleGraph, budget: &SolverBudget) -> Result<Planarity, SolverError> {
    check_budget("is_planar", g.vertex_count(), budget.max_exact_vertices)?;
    if planar(g) {
        return Ok(Planarity {
            is_planar: true,
            witness: None,
        });
    }
    Ok(Planarity {
        is_planar: false,
        witness: Some(kuratowski_subgraph(g)),
    })
}

/// Planarity without a witness.
pub fn planar(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    if n >= 3 && g.edge_count() > 3 * n - 6 {
        return false;
    }
    let (_, blocks) = biconnected_components(g);
    blocks.iter().all(|b| block_planar(b))
}

/// Deletes every edge whose removal keeps the graph non-planar. What is left
/// is edge-minimal non-planar, hence a subdivision of `K5` or `K3,3`.
fn kuratowski_subgraph(g: &SimpleGraph) -> Kuratowski {
    let n = g.vertex_count();
    let mut keep = g.clone();
    for (u, v) in g.edges() {
        let mut trial = keep.clone();
        trial.disconnect(u, v);
        if !planar(&trial) {
            keep = trial;
        }
    }
    let branch_vertices: Vec<usize> = (0..n).filter(|&v| keep.degree(v) >= 3).collect();
    let kind = if branch_vertices.len() == 5 {
        KuratowskiKind::K5
    } else {
        KuratowskiKind::K33
    };
    Kuratowski {
        kind,
        branch_vertices,
        edges: keep.edges(),
    }
}

enum Fragment {
    Edge(usize, usize),
    Component(Vec<usize>),
}

struct Embedding {
    adj: Vec<Vec<usize>>,
    placed_vertex: Vec<bool>,
    placed_edge: HashSet<(usize, usize)>,
    faces: Vec<Vec<usize>>,
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

fn block_planar(edges: &[(usize, usize)]) -> bool {
    // anything smaller than K3,3 is planar
    if edges.len() < 9 {
        return true;
    }
    let mut local: HashMap<usize, usize> = HashMap::new();
    for &(u, v) in edges {
        let next = local.len();
        local.entry(u).or_insert(next);
        let next = local.len();
        local.entry(v).or_insert(next);
    }
    let n = local.len();
    if edges.len() > 3 * n - 6 {
        return false;
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        let (a, b) = (local[&u], local[&v]);
        adj[a].push(b);
        adj[b].push(a);
    }
    adj.iter_mut().for_each(|a| a.sort_unstable());

    let cycle = find_cycle(&adj);
    let mut emb = Embedding {
        placed_vertex: vec![false; n],
        placed_edge: HashSet::new(),
        faces: vec![cycle.clone(), cycle.clone()],
        adj,
    };
    for (i, &v) in cycle.iter().enumerate() {
        emb.placed_vertex[v] = true;
        emb.placed_edge.insert(key(v, cycle[(i + 1) % cycle.len()]));
    }

    loop {
        let fragments = emb.fragments();
        if fragments.is_empty() {
            return true;
        }
        let face_sets: Vec<HashSet<usize>> =
            emb.faces.iter().map(|f| f.iter().copied().collect()).collect();
        let mut choice: Option<(usize, usize)> = None;
        for (i, (_, contacts)) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..face_sets.len())
                .filter(|&f| contacts.iter().all(|c| face_sets[f].contains(c)))
                .collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    choice = Some((i, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((i, admissible[0]));
                    }
                }
            }
        }
        let (fi, face) = choice.expect("at least one fragment");
        let path = emb.fragment_path(&fragments[fi].0, &fragments[fi].1);
        emb.embed_path(face, &path);
    }
}

/// A cycle through a DFS back edge. The block is 2-connected with at least
/// nine edges, so one exists.
fn find_cycle(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut stack = vec![(0usize, 0usize)];
    depth[0] = 0;
    while let Some(top) = stack.last_mut() {
        let u = top.0;
        if top.1 < adj[u].len() {
            let w = adj[u][top.1];
            top.1 += 1;
            if depth[w] == usize::MAX {
                depth[w] = depth[u] + 1;
                parent[w] = u;
                stack.push((w, 0));
            } else if w != parent[u] && depth[w] < depth[u] {
                let mut cycle = vec![u];
                let mut x = u;
                while x != w {
                    x = parent[x];
                    cycle.push(x);
                }
                return cycle;
            }
        } else {
            stack.pop();
        }
    }
    unreachable!("a biconnected block with nine edges has a cycle")
}

impl Embedding {
    /// Fragments relative to the embedded subgraph, each with its sorted
    /// contact vertices.
    fn fragments(&self) -> Vec<(Fragment, Vec<usize>)> {
        let n = self.adj.len();
        let mut out = Vec::new();
        for u in 0..n {
            if !self.placed_vertex[u] {
                continue;
            }
            for &v in &self.adj[u] {
                if v > u && self.placed_vertex[v] && !self.placed_edge.contains(&key(u, v)) {
                    out.push((Fragment::Edge(u, v), vec![u, v]));
                }
            }
        }
        let mut seen = vec![false; n];
        for s in 0..n {
            if self.placed_vertex[s] || seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut contacts = Vec::new();
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if self.placed_vertex[w] {
                        contacts.push(w);
                    } else if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            contacts.sort_unstable();
            contacts.dedup();
            out.push((Fragment::Component(comp), contacts));
        }
        out
    }

    /// A path through the fragment joining two distinct contacts.
    fn fragment_path(&self, frag: &Fragment, contacts: &[usize]) -> Vec<usize> {
        match frag {
            Fragment::Edge(u, v) => vec![*u, *v],
            Fragment::Component(vertices) => {
                let inside: HashSet<usize> = vertices.iter().copied().collect();
                let start = contacts[0];
                let mut prev: HashMap<usize, usize> = HashMap::new();
                let mut queue = VecDeque::new();
                for &w in &self.adj[start] {
                    if inside.contains(&w) && !prev.contains_key(&w) {
                        prev.insert(w, start);
                        queue.push_back(w);
                    }
                }
                while let Some(u) = queue.pop_front() {
                    for &w in &self.adj[u] {
                        if inside.contains(&w) {
                            if let std::collections::hash_map::Entry::Vacant(e) = prev.entry(w) {
                                e.insert(u);
                                queue.push_back(w);
                            }
                        } else if self.placed_vertex[w] && w != start {
                            let mut path = vec![w, u];
                            let mut x = u;
                            while prev[&x] != start {
                                x = prev[&x];
                                path.push(x);
                            }
                            path.push(start);
                            path.reverse();
                            return path;
                        }
                    }
                }
                unreachable!("fragments of a biconnected block have two contacts")
            }
        }
    }

    /// Splits `face` along `path`, whose endpoints both lie on it.
    fn embed_path(&mut self, face: usize, path: &[usize]) {
        let boundary = &self.faces[face];
        let len = boundary.len();
        let (a, b) = (path[0], *path.last().expect("non-empty path"));
        let ia = boundary.iter().position(|&x| x == a).expect("a on face");
        let ib = boundary.iter().position(|&x| x == b).expect("b on face");
        let walk = |from: usize, to: usize| {
            let mut out = vec![boundary[from]];
            let mut i = from;
            while i != to {
                i = (i + 1) % len;
                out.push(boundary[i]);
            }
            out
        };
        let inner = &path[1..path.len() - 1];
        let mut first = walk(ia, ib);
        first.extend(inner.iter().rev());
        let mut second = walk(ib, ia);
        second.extend(inner.iter());
        self.faces[face] = first;
        self.faces.push(second);
        for &v in path {
            self.placed_vertex[v] = true;
        }
        for w in path.windows(2) {
            self.placed_edge.insert(key(w[0], w[1]));
        }
    }
}
