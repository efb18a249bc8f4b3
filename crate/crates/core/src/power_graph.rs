//! Power graphs `Γ(G)`, reduced power graphs `Γ*(G)` and normal-subgroup-based
//! power graphs `Γ_H(G)`.
//!
//! `Γ_H(G)` has vertex set `(G \ H) ∪ {e}`; distinct `x`, `y` are adjacent when
//! `xH = y^m H` or `yH = x^n H` for some positive `m`, `n`. It is built two
//! ways: [`nsb_power_graph`] scans exponents straight from the definition, and
//! [`expand_quotient_graph`] blows up `Γ(G/H)` coset by coset. The two must
//! agree edge for edge.

use fixedbitset::FixedBitSet;

use crate::error::{GraphError, GroupError};
use crate::graph::SimpleGraph;
use crate::group::{Element, FiniteGroup};
use crate::subgroup::{coset_partition, QuotientGroup, SubgroupSet};

/// `Γ_H(G)` plus the bookkeeping that ties vertices back to the group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NsbPowerGraph {
    pub graph: SimpleGraph,
    pub group_name: String,
    pub subgroup: String,
    /// Group element of each vertex; vertex 0 is the identity.
    pub vertex_element: Vec<Element>,
    /// Coset index (in `G/H`) of each vertex.
    pub coset_of: Vec<usize>,
    /// Order of `H`.
    pub subgroup_order: usize,
}

/// Distinct `u`, `v` adjacent iff `u ∈ <v>` or `v ∈ <u>`.
pub fn power_graph(g: &FiniteGroup) -> SimpleGraph {
    let n = g.order();
    let cyclic: Vec<FixedBitSet> = (0..n)
        .map(|a| {
            let mut s = FixedBitSet::with_capacity(n);
            g.powers(a).into_iter().for_each(|x| s.insert(x));
            s
        })
        .collect();
    let mut graph = SimpleGraph::new(g.labels().to_vec()).expect("group labels are distinct");
    for u in 0..n {
        for v in u + 1..n {
            if cyclic[v].contains(u) || cyclic[u].contains(v) {
                graph.connect(u, v);
            }
        }
    }
    graph
}

/// `Γ(G)` with the identity vertex removed.
pub fn reduced_power_graph(g: &FiniteGroup) -> Result<SimpleGraph, GraphError> {
    if g.order() < 2 {
        return Err(GraphError::TrivialGroup);
    }
    let full = power_graph(g);
    let rest: Vec<usize> = (1..g.order()).collect();
    Ok(full.induced(&rest))
}

fn check_subgroup(g: &FiniteGroup, h: &SubgroupSet) -> Result<(), GroupError> {
    if h.parent() != g {
        return Err(GroupError::ForeignSubgroup);
    }
    if !h.is_normal() {
        return Err(GroupError::NotNormal(h.description()));
    }
    if h.is_whole() {
        return Err(GroupError::WholeGroup);
    }
    Ok(())
}

/// `e` first, then every element outside `H` in ascending order.
fn vertex_elements(g: &FiniteGroup, h: &SubgroupSet) -> Vec<Element> {
    std::iter::once(0)
        .chain((1..g.order()).filter(|&a| !h.contains(a)))
        .collect()
}

/// `Γ_H(G)` straight from the definition: for each pair, scan `m = 1..o(y)`
/// for `xH = y^m H` and symmetrically.
pub fn nsb_power_graph(g: &FiniteGroup, h: &SubgroupSet) -> Result<NsbPowerGraph, GroupError> {
    check_subgroup(g, h)?;
    let vertices = vertex_elements(g, h);
    let same_coset = |x: Element, y: Element| h.contains(g.mul(g.inverse(x), y));
    // x H = y^m H for some m >= 1; the powers of y cycle with period o(y)
    let is_coset_power = |x: Element, y: Element| g.powers(y).into_iter().any(|ym| same_coset(x, ym));
    let labels = vertices.iter().map(|&a| g.label(a).to_string()).collect();
    let mut graph = SimpleGraph::new(labels).expect("group labels are distinct");
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            let (x, y) = (vertices[i], vertices[j]);
            if is_coset_power(x, y) || is_coset_power(y, x) {
                graph.connect(i, j);
            }
        }
    }
    let cosets = coset_partition(g, h)?;
    Ok(NsbPowerGraph {
        graph,
        group_name: g.name().to_string(),
        subgroup: h.description(),
        coset_of: vertices.iter().map(|&a| cosets.coset_of[a]).collect(),
        vertex_element: vertices,
        subgroup_order: h.order(),
    })
}

/// `Γ_H(G)` from `Γ(G/H)`: each non-identity coset becomes a clique, two
/// cosets are fully joined iff adjacent in `Γ(G/H)`, and `e` sees everything.
pub fn expand_quotient_graph(
    q: &QuotientGroup,
    h: &SubgroupSet,
) -> Result<NsbPowerGraph, GroupError> {
    if q.subgroup() != h {
        return Err(GroupError::MismatchedQuotient);
    }
    let g = q.parent();
    check_subgroup(g, h)?;
    let quotient_graph = power_graph(q.group());
    let vertices = vertex_elements(g, h);
    let coset_of: Vec<usize> = vertices.iter().map(|&a| q.project(a)).collect();
    let labels = vertices.iter().map(|&a| g.label(a).to_string()).collect();
    let mut graph = SimpleGraph::new(labels).expect("group labels are distinct");
    for i in 1..vertices.len() {
        graph.connect(0, i);
    }
    for i in 1..vertices.len() {
        for j in i + 1..vertices.len() {
            let (ci, cj) = (coset_of[i], coset_of[j]);
            if ci == cj || quotient_graph.has_edge(ci, cj) {
                graph.connect(i, j);
            }
        }
    }
    Ok(NsbPowerGraph {
        graph,
        group_name: g.name().to_string(),
        subgroup: h.description(),
        vertex_element: vertices,
        coset_of,
        subgroup_order: h.order(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_group, GroupSpec};
    use crate::subgroup::{all_normal_subgroups, generated_subgroup, quotient};

    fn group(s: &str) -> FiniteGroup {
        make_group(&s.parse::<GroupSpec>().unwrap()).unwrap()
    }

    /// Pairwise oracle: is one a positive power of the other, by repeated multiplication.
    fn oracle_power_edges(g: &FiniteGroup) -> Vec<(usize, usize)> {
        let n = g.order();
        let is_power = |u: usize, v: usize| {
            let mut x = v;
            for _ in 0..n {
                if x == u {
                    return true;
                }
                x = g.mul(x, v);
            }
            false
        };
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if is_power(u, v) || is_power(v, u) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    #[test]
    fn power_graph_examples() {
        assert_eq!(power_graph(&group("Z2")).edge_count(), 1);
        assert!(power_graph(&group("Z5")).is_complete());
        let z6 = group("Z6");
        let g = power_graph(&z6);
        assert_eq!(g.edges(), oracle_power_edges(&z6));
        assert_eq!(g.edge_count(), 13);
        let missing: Vec<(usize, usize)> = (0..6)
            .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        assert_eq!(missing, vec![(2, 3), (3, 4)]);
        for s in ["D4", "Q8", "S4", "Z2xZ6"] {
            let grp = group(s);
            assert_eq!(power_graph(&grp).edges(), oracle_power_edges(&grp), "{s}");
        }
    }

    #[test]
    fn reduced_examples() {
        let r = reduced_power_graph(&group("Z2")).unwrap();
        assert_eq!((r.vertex_count(), r.edge_count()), (1, 0));
        assert!(reduced_power_graph(&group("Z5")).unwrap().is_complete());
        assert_eq!(reduced_power_graph(&group("Z6")).unwrap().edge_count(), 13 - 5);
        assert_eq!(reduced_power_graph(&group("Z1")), Err(GraphError::TrivialGroup));
    }

    #[test]
    fn nsb_examples() {
        let z6 = group("Z6");
        let trivial = generated_subgroup(&z6, &[]).unwrap();
        assert_eq!(nsb_power_graph(&z6, &trivial).unwrap().graph, power_graph(&z6));

        let z4 = group("Z4");
        let h = generated_subgroup(&z4, &[2]).unwrap();
        let g = nsb_power_graph(&z4, &h).unwrap();
        assert_eq!(g.vertex_element, vec![0, 1, 3]);
        assert!(g.graph.is_complete());
        assert_eq!(g.graph.edge_count(), 3);

        let d4 = group("D4");
        let center = generated_subgroup(&d4, &[2]).unwrap();
        let g = nsb_power_graph(&d4, &center).unwrap();
        assert_eq!(g.graph.vertex_count(), 7);
        assert_eq!(g.graph.edge_count(), 9);
        for i in 1..7 {
            for j in i + 1..7 {
                assert_eq!(g.graph.has_edge(i, j), g.coset_of[i] == g.coset_of[j]);
            }
        }
    }

    #[test]
    fn nsb_rejections() {
        let s3 = group("S3");
        let t = (1..6).find(|&a| s3.element_order(a).unwrap() == 2).unwrap();
        let ht = generated_subgroup(&s3, &[t]).unwrap();
        assert!(matches!(nsb_power_graph(&s3, &ht), Err(GroupError::NotNormal(_))));
        let whole = generated_subgroup(&s3, &[1, 2, 3]).unwrap();
        assert!(whole.is_whole());
        assert_eq!(nsb_power_graph(&s3, &whole), Err(GroupError::WholeGroup));
        let z4 = group("Z4");
        let h = generated_subgroup(&z4, &[2]).unwrap();
        assert_eq!(nsb_power_graph(&s3, &h), Err(GroupError::ForeignSubgroup));
        let q = quotient(&z4, &h).unwrap();
        let other = generated_subgroup(&z4, &[]).unwrap();
        assert_eq!(expand_quotient_graph(&q, &other), Err(GroupError::MismatchedQuotient));
    }

    #[test]
    fn expansion_examples() {
        let z4 = group("Z4");
        let h = generated_subgroup(&z4, &[2]).unwrap();
        let q = quotient(&z4, &h).unwrap();
        assert_eq!(expand_quotient_graph(&q, &h).unwrap(), nsb_power_graph(&z4, &h).unwrap());

        let z6 = group("Z6");
        let h = generated_subgroup(&z6, &[3]).unwrap();
        let g = expand_quotient_graph(&quotient(&z6, &h).unwrap(), &h).unwrap();
        assert_eq!(g.graph.vertex_count(), 5);
        assert!(g.graph.is_complete());

        let z12 = group("Z12");
        let h = generated_subgroup(&z12, &[6]).unwrap();
        let g = expand_quotient_graph(&quotient(&z12, &h).unwrap(), &h).unwrap();
        assert_eq!(g.graph.vertex_count(), 11);
        assert_eq!(g.graph.edge_count(), 47);
        assert_eq!(g, nsb_power_graph(&z12, &h).unwrap());
    }

    #[test]
    fn both_routes_agree_with_structure() {
        for s in ["Z8", "Z12", "D4", "D6", "Q8", "S3", "S4", "Z2xZ4", "E(2,3)", "Z3xZ3"] {
            let g = group(s);
            for h in all_normal_subgroups(&g).unwrap() {
                if h.is_whole() {
                    continue;
                }
                let direct = nsb_power_graph(&g, &h).unwrap();
                let expanded = expand_quotient_graph(&quotient(&g, &h).unwrap(), &h).unwrap();
                assert_eq!(direct, expanded, "{s} / {}", h.description());
                let gr = &direct.graph;
                assert_eq!(gr.degree(0), g.order() - h.order());
                let n = gr.vertex_count();
                // coset cliques and homogeneity
                for i in 1..n {
                    for j in i + 1..n {
                        if direct.coset_of[i] == direct.coset_of[j] {
                            assert!(gr.has_edge(i, j));
                        }
                        for k in 1..n {
                            for l in 1..n {
                                if direct.coset_of[k] == direct.coset_of[i]
                                    && direct.coset_of[l] == direct.coset_of[j]
                                    && k != l
                                {
                                    assert_eq!(gr.has_edge(i, j), gr.has_edge(k, l));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}
