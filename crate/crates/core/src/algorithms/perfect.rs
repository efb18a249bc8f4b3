use fixedbitset::FixedBitSet;

use super::{check_budget, SolverBudget};
use crate::error::SolverError;
use crate::graph::SimpleGraph;

/// Outcome of the odd-hole search on a graph and its complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Perfection {
    pub is_perfect: bool,
    /// An induced odd cycle of length at least 5, in cycle order.
    pub odd_hole: Option<Vec<usize>>,
    /// Whether `odd_hole` lives in the complement rather than the graph.
    pub in_complement: bool,
}

/// Perfect iff neither the graph nor its complement has an odd hole.
pub fn is_perfect(g: &SimpleGraph, budget: &SolverBudget) -> Result<Perfection, SolverError> {
    check_budget("is_perfect", g.vertex_count(), budget.max_odd_hole_vertices)?;
    if let Some(hole) = find_odd_hole(g) {
        return Ok(Perfection {
            is_perfect: false,
            odd_hole: Some(hole),
            in_complement: false,
        });
    }
    if let Some(hole) = find_odd_hole(&g.complement()) {
        return Ok(Perfection {
            is_perfect: false,
            odd_hole: Some(hole),
            in_complement: true,
        });
    }
    Ok(Perfection {
        is_perfect: true,
        odd_hole: None,
        in_complement: false,
    })
}

/// An induced odd cycle of length at least 5, if any.
///
/// Every hole is found from its smallest vertex `s`: induced paths starting at
/// `s` are extended through larger vertices until one closes back to `s`.
pub fn find_odd_hole(g: &SimpleGraph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    for s in 0..n {
        let mut allowed = FixedBitSet::with_capacity(n);
        allowed.insert_range(s + 1..);
        let mut path = vec![s];
        // neighbours of interior path vertices
        let mut blocked = FixedBitSet::with_capacity(n);
        if extend(g, &allowed, &mut path, &mut blocked) {
            return Some(path);
        }
    }
    None
}

fn extend(g: &SimpleGraph, allowed: &FixedBitSet, path: &mut Vec<usize>, blocked: &mut FixedBitSet) -> bool {
    let s = path[0];
    let end = *path.last().expect("non-empty path");
    let candidates: Vec<usize> = g
        .neighbors(end)
        .filter(|&w| allowed.contains(w) && !blocked.contains(w) && !path.contains(&w))
        .collect();
    for w in candidates {
        if path.len() >= 2 && g.has_edge(w, s) {
            // path + w is an induced cycle of length path.len() + 1
            let len = path.len() + 1;
            if len >= 5 && len % 2 == 1 {
                path.push(w);
                return true;
            }
            continue;
        }
        let saved = blocked.clone();
        if path.len() >= 2 {
            // the old endpoint becomes interior
            blocked.union_with(g.neighbor_set(end));
        }
        path.push(w);
        if extend(g, allowed, path, blocked) {
            return true;
        }
        path.pop();
        *blocked = saved;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_odd_hole(g: &SimpleGraph, c: &[usize]) -> bool {
        let k = c.len();
        k >= 5
            && k % 2 == 1
            && (0..k).all(|i| {
                (0..k).all(|j| {
                    let d = (i + k - j) % k;
                    i == j || g.has_edge(c[i], c[j]) == (d == 1 || d == k - 1)
                })
            })
    }

    #[test]
    fn examples() {
        let b = SolverBudget::default();
        let c5 = SimpleGraph::cycle(5);
        let p = is_perfect(&c5, &b).unwrap();
        assert!(!p.is_perfect);
        assert!(is_odd_hole(&c5, p.odd_hole.as_ref().unwrap()));
        assert!(is_perfect(&SimpleGraph::complete(6), &b).unwrap().is_perfect);
        assert!(is_perfect(&SimpleGraph::cycle(6), &b).unwrap().is_perfect);
        let c7 = SimpleGraph::cycle(7);
        assert!(is_odd_hole(&c7, &find_odd_hole(&c7).unwrap()));
        // the complement of C7 has no odd hole itself; C7 is found in its complement
        let p = is_perfect(&c7.complement(), &b).unwrap();
        assert!(!p.is_perfect && p.in_complement);
        // C5 with a chord: no odd hole; a pendant path on C9 still has one
        let mut chorded = SimpleGraph::cycle(5);
        chorded.add_edge(0, 2).unwrap();
        assert_eq!(find_odd_hole(&chorded), None);
        let mut tail = SimpleGraph::with_vertices(11);
        for i in 0..9 {
            tail.add_edge(i, (i + 1) % 9).unwrap();
        }
        tail.add_edge(9, 3).unwrap();
        tail.add_edge(10, 9).unwrap();
        assert!(is_odd_hole(&tail, &find_odd_hole(&tail).unwrap()));
    }

    #[test]
    fn budget() {
        let b = SolverBudget::default();
        assert!(is_perfect(&SimpleGraph::complete(25), &b).is_err());
    }
}
