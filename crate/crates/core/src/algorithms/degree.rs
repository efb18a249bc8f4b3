use crate::error::GroupError;
use crate::group::{euler_phi, Element, FiniteGroup};
use crate::subgroup::QuotientGroup;

/// Degree of `v` in `Γ(G)` from cyclic-subgroup data alone: the sum of
/// `φ(|C|)` over cyclic subgroups `C` properly containing `<v>`, plus
/// `o(v) - 1`.
pub fn degree_in_power_graph_formula(g: &FiniteGroup, v: Element) -> Result<u64, GroupError> {
    let order_v = g.element_order(v)?;
    let mut cyclic: Vec<Vec<Element>> = (0..g.order())
        .map(|a| {
            let mut c = g.powers(a);
            c.sort_unstable();
            c
        })
        .collect();
    cyclic.sort();
    cyclic.dedup();
    let mut total = order_v as u64 - 1;
    for c in cyclic {
        if c.len() > order_v && c.binary_search(&v).is_ok() {
            total += euler_phi(c.len() as u64)?;
        }
    }
    Ok(total)
}

/// Degree in `Γ_H(G)` of any vertex lying in coset `coset` of `q`:
/// `|H|` times the power-graph degree of that coset in `G/H`.
///
/// For the identity coset this is `|G| - |H|`, the degree of `e`.
pub fn nsb_degree_formula(q: &QuotientGroup, coset: usize) -> Result<u64, GroupError> {
    let h = q.subgroup().order() as u64;
    Ok(h * degree_in_power_graph_formula(q.group(), coset)?)
}
