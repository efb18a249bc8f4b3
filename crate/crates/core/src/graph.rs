//! Undirected, loop-free graphs with stable vertex labels.

use std::collections::HashSet;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// A simple graph stored as symmetric bitset rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    labels: Vec<String>,
    rows: Vec<FixedBitSet>,
}

impl SimpleGraph {
    /// An edgeless graph. Labels must be pairwise distinct.
    pub fn new(labels: Vec<String>) -> Result<Self, GraphError> {
        let mut seen = HashSet::with_capacity(labels.len());
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(GraphError::DuplicateLabel(l.clone()));
            }
        }
        let n = labels.len();
        Ok(Self {
            labels,
            rows: vec![FixedBitSet::with_capacity(n); n],
        })
    }

    /// An edgeless graph labelled `0..n`.
    pub fn with_vertices(n: usize) -> Self {
        Self::new((0..n).map(|i| i.to_string()).collect()).expect("numeric labels are distinct")
    }

    pub fn from_edges(
        labels: Vec<String>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut g = Self::new(labels)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::with_vertices(n);
        for u in 0..n {
            for v in u + 1..n {
                g.connect(u, v);
            }
        }
        g
    }

    /// The cycle `C_n`; `n` must be at least 3.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Self::with_vertices(n);
        for u in 0..n {
            g.connect(u, (u + 1) % n);
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let count = self.vertex_count();
        for w in [u, v] {
            if w >= count {
                return Err(GraphError::VertexOutOfRange { vertex: w, count });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        self.connect(u, v);
        Ok(())
    }

    #[inline]
    pub(crate) fn connect(&mut self, u: usize, v: usize) {
        debug_assert_ne!(u, v);
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    /// Removes the edge `u`–`v` if present.
    pub fn disconnect(&mut self, u: usize, v: usize) {
        self.rows[u].set(v, false);
        self.rows[v].set(u, false);
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    /// Neighbourhood of `v` as a bitset over all vertices.
    pub fn neighbor_set(&self, v: usize) -> &FixedBitSet {
        &self.rows[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[v].ones()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones(..)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.vertex_count()).map(|v| self.degree(v)).collect()
    }

    /// All edges `(i, j)` with `i < j`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, row) in self.rows.iter().enumerate() {
            out.extend(row.ones().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.rows.iter().all(|r| r.count_ones(..) == n.saturating_sub(1))
    }

    pub fn complement(&self) -> Self {
        let n = self.vertex_count();
        let mut rows = Vec::with_capacity(n);
        for (u, row) in self.rows.iter().enumerate() {
            let mut c = row.clone();
            c.toggle_range(..);
            c.set(u, false);
            rows.push(c);
        }
        Self {
            labels: self.labels.clone(),
            rows,
        }
    }

    /// Subgraph induced by `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        let mut g = Self::new(labels).expect("subset of distinct labels");
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.connect(i, j);
                }
            }
        }
        g
    }

    /// DOT text: one node line per vertex (label only) then sorted edges.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph {\n");
        for (i, l) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "  {i} [label=\"{}\"];", escape_dot(l));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }

    /// `{"vertices": [labels], "edges": [[i, j], ...]}` with `i < j`, sorted.
    pub fn to_json(&self) -> String {
        let doc = GraphJson {
            vertices: self.labels.clone(),
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        };
        serde_json::to_string(&doc).expect("graph JSON serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        let doc: GraphJson =
            serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))?;
        Self::from_edges(doc.vertices, doc.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<String>,
    edges: Vec<[usize; 2]>,
}

fn escape_dot(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_errors() {
        assert_eq!(
            SimpleGraph::new(vec!["a".into(), "a".into()]),
            Err(GraphError::DuplicateLabel("a".into()))
        );
        let mut g = SimpleGraph::with_vertices(3);
        assert_eq!(g.add_edge(1, 1), Err(GraphError::Loop(1)));
        assert_eq!(
            g.add_edge(0, 3),
            Err(GraphError::VertexOutOfRange { vertex: 3, count: 3 })
        );
        g.add_edge(0, 2).unwrap();
        g.add_edge(2, 0).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(2, 0));
    }

    #[test]
    fn complement_and_induced() {
        let c5 = SimpleGraph::cycle(5);
        let comp = c5.complement();
        assert_eq!(comp.edge_count(), 5);
        assert!(comp.degrees().iter().all(|&d| d == 2));
        assert!(!comp.has_edge(0, 0));
        let sub = c5.induced(&[0, 1, 2]);
        assert_eq!(sub.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(sub.labels(), &["0", "1", "2"]);
    }

    #[test]
    fn exports() {
        let g = SimpleGraph::from_edges(vec!["e".into(), "a\"b".into()], [(1, 0)]).unwrap();
        assert_eq!(
            g.to_dot(),
            "graph {\n  0 [label=\"e\"];\n  1 [label=\"a\\\"b\"];\n  0 -- 1;\n}\n"
        );
        assert_eq!(g.to_json(), r#"{"vertices":["e","a\"b"],"edges":[[0,1]]}"#);
        assert_eq!(SimpleGraph::from_json(&g.to_json()).unwrap(), g);
        assert!(SimpleGraph::from_json(r#"{"vertices":["a"],"edges":[[0,0]]}"#).is_err());
        assert!(SimpleGraph::from_json("{").is_err());
    }
}
