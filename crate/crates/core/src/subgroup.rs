//! Subgroups, normality, subgroup enumeration and quotient groups.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::GroupError;
use crate::group::{prime_power, Element, FiniteGroup, MAX_VALIDATED_ORDER};

/// A subgroup of a specific parent group.
#[derive(Clone)]
pub struct SubgroupSet {
    parent: FiniteGroup,
    elements: Vec<Element>,
    members: FixedBitSet,
    generators: Vec<Element>,
    normal: bool,
}

impl fmt::Debug for SubgroupSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SubgroupSet")
            .field("parent", &self.parent.name())
            .field("elements", &self.elements)
            .field("normal", &self.normal)
            .finish()
    }
}

impl PartialEq for SubgroupSet {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.elements == other.elements
    }
}

impl Eq for SubgroupSet {}

impl SubgroupSet {
    fn from_members(parent: &FiniteGroup, members: FixedBitSet) -> Self {
        let elements: Vec<Element> = members.ones().collect();
        debug_assert_eq!(parent.order() % elements.len(), 0);
        let generators = canonical_generators(parent, &elements);
        let normal = conjugation_closed(parent, &members, &elements);
        Self {
            parent: parent.clone(),
            elements,
            members,
            generators,
            normal,
        }
    }

    pub fn parent(&self) -> &FiniteGroup {
        &self.parent
    }

    /// Sorted element indices.
    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.elements.len()
    }

    pub fn contains(&self, a: Element) -> bool {
        a < self.members.len() && self.members.contains(a)
    }

    pub fn is_normal(&self) -> bool {
        self.normal
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.elements.len() == self.parent.order()
    }

    /// Greedy generating set: scan elements ascending and keep each one not
    /// already generated by the previous picks.
    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    /// `{e}` for the trivial subgroup, otherwise `<g1,g2,...>` by label.
    pub fn description(&self) -> String {
        if self.is_trivial() {
            return "{e}".to_string();
        }
        let labels: Vec<&str> = self.generators.iter().map(|&g| self.parent.label(g)).collect();
        format!("<{}>", labels.join(","))
    }

    fn ensure_parent(&self, g: &FiniteGroup) -> Result<(), GroupError> {
        if &self.parent == g {
            Ok(())
        } else {
            Err(GroupError::ForeignSubgroup)
        }
    }
}

/// Right-multiplies `seed` by `gens` until closed. When `seed` lies inside
/// `<gens>` the result is exactly `<gens>`.
fn close(g: &FiniteGroup, mut members: FixedBitSet, gens: &[Element]) -> FixedBitSet {
    let mut queue: VecDeque<Element> = members.ones().collect();
    while let Some(x) = queue.pop_front() {
        for &s in gens {
            let y = g.mul(x, s);
            if !members.put(y) {
                queue.push_back(y);
            }
        }
    }
    members
}

fn singleton_identity(g: &FiniteGroup) -> FixedBitSet {
    let mut m = FixedBitSet::with_capacity(g.order());
    m.insert(0);
    m
}

fn canonical_generators(g: &FiniteGroup, elements: &[Element]) -> Vec<Element> {
    let mut gens = Vec::new();
    let mut current = singleton_identity(g);
    for &a in elements {
        if !current.contains(a) {
            gens.push(a);
            current = close(g, current, &gens);
        }
    }
    gens
}

fn conjugation_closed(g: &FiniteGroup, members: &FixedBitSet, elements: &[Element]) -> bool {
    (0..g.order()).all(|x| {
        let xi = g.inverse(x);
        elements
            .iter()
            .all(|&h| members.contains(g.mul(g.mul(x, h), xi)))
    })
}

/// The smallest subgroup containing `gens`, by breadth-first closure.
pub fn generated_subgroup(g: &FiniteGroup, gens: &[Element]) -> Result<SubgroupSet, GroupError> {
    for &a in gens {
        g.check_element(a)?;
    }
    let mut seed = singleton_identity(g);
    for &a in gens {
        seed.insert(a);
    }
    let members = close(g, seed, gens);
    Ok(SubgroupSet::from_members(g, members))
}

/// Exhaustive conjugation test: `x h x^-1` in `H` for all `x`, `h`.
pub fn is_normal(g: &FiniteGroup, h: &SubgroupSet) -> Result<bool, GroupError> {
    h.ensure_parent(g)?;
    Ok(h.normal)
}

/// Every subgroup of `g`, sorted by order then element list.
///
/// Starts from the cyclic subgroups and closes the collection under joins;
/// each subgroup is the join of its cyclic subgroups, so joining with cyclic
/// subgroups alone reaches the same fixpoint as all pairwise joins.
pub fn all_subgroups(g: &FiniteGroup) -> Result<Vec<SubgroupSet>, GroupError> {
    if g.order() > MAX_VALIDATED_ORDER {
        return Err(GroupError::SizeBudget {
            order: g.order() as u128,
            max: MAX_VALIDATED_ORDER,
        });
    }
    struct Found {
        members: FixedBitSet,
        gens: Vec<Element>,
    }
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    let mut cyclic: Vec<Found> = Vec::new();
    for a in 0..g.order() {
        let mut m = FixedBitSet::with_capacity(g.order());
        for x in g.powers(a) {
            m.insert(x);
        }
        if seen.insert(m.clone()) {
            cyclic.push(Found { members: m, gens: vec![a] });
        }
    }
    let mut all: Vec<FixedBitSet> = cyclic.iter().map(|c| c.members.clone()).collect();
    let mut work: Vec<Found> = cyclic
        .iter()
        .map(|c| Found {
            members: c.members.clone(),
            gens: c.gens.clone(),
        })
        .collect();
    while let Some(s) = work.pop() {
        for c in &cyclic {
            if c.members.is_subset(&s.members) {
                continue;
            }
            let mut gens = s.gens.clone();
            gens.extend_from_slice(&c.gens);
            let joined = close(g, s.members.clone(), &gens);
            if seen.insert(joined.clone()) {
                all.push(joined.clone());
                work.push(Found { members: joined, gens });
            }
        }
    }
    let mut subgroups: Vec<SubgroupSet> = all
        .into_iter()
        .map(|m| SubgroupSet::from_members(g, m))
        .collect();
    subgroups.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements.cmp(&b.elements)));
    Ok(subgroups)
}

/// Every normal subgroup of `g`, including `{e}` and `g`, in the same order
/// as [`all_subgroups`].
pub fn all_normal_subgroups(g: &FiniteGroup) -> Result<Vec<SubgroupSet>, GroupError> {
    Ok(all_subgroups(g)?.into_iter().filter(|h| h.normal).collect())
}

/// Left cosets `aH` numbered by smallest element, so coset 0 is `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetPartition {
    pub coset_of: Vec<usize>,
    pub representatives: Vec<Element>,
}

pub fn coset_partition(g: &FiniteGroup, h: &SubgroupSet) -> Result<CosetPartition, GroupError> {
    h.ensure_parent(g)?;
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut representatives = Vec::with_capacity(h.index());
    for a in 0..g.order() {
        if coset_of[a] != usize::MAX {
            continue;
        }
        let id = representatives.len();
        representatives.push(a);
        for &x in h.elements() {
            coset_of[g.mul(a, x)] = id;
        }
    }
    Ok(CosetPartition {
        coset_of,
        representatives,
    })
}

/// `G/H` together with the projection `G -> G/H`.
#[derive(Debug, Clone)]
pub struct QuotientGroup {
    group: FiniteGroup,
    projection: Vec<usize>,
    representatives: Vec<Element>,
    subgroup: SubgroupSet,
}

impl QuotientGroup {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// Coset index of every element of the parent group.
    pub fn projection(&self) -> &[usize] {
        &self.projection
    }

    pub fn project(&self, a: Element) -> usize {
        self.projection[a]
    }

    /// Smallest element of each coset; coset 0 is `H` itself.
    pub fn representatives(&self) -> &[Element] {
        &self.representatives
    }

    pub fn subgroup(&self) -> &SubgroupSet {
        &self.subgroup
    }

    pub fn parent(&self) -> &FiniteGroup {
        self.subgroup.parent()
    }
}

/// Builds `G/H`. Rejects non-normal `H`.
pub fn quotient(g: &FiniteGroup, h: &SubgroupSet) -> Result<QuotientGroup, GroupError> {
    h.ensure_parent(g)?;
    if !h.normal {
        return Err(GroupError::NotNormal(h.description()));
    }
    let cosets = coset_partition(g, h)?;
    let reps = &cosets.representatives;
    let labels = reps.iter().map(|&r| format!("{}H", g.label(r))).collect();
    let name = format!("{}/{}", g.name(), h.description());
    let quotient = FiniteGroup::from_fn(name, labels, |i, j| {
        cosets.coset_of[g.mul(reps[i], reps[j])]
    })?;
    Ok(QuotientGroup {
        group: quotient,
        projection: cosets.coset_of,
        representatives: cosets.representatives,
        subgroup: h.clone(),
    })
}

/// Structural facts the closed-form checks depend on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct StructureFlags {
    pub is_cyclic: bool,
    /// The prime `p` when the order is `p^k` with `k >= 1`.
    pub p_group: Option<u64>,
    /// Cyclic of order 1 or of prime-power order.
    pub is_cyclic_p_group_or_trivial: bool,
    /// Every non-identity element has order 2 (vacuously true when trivial).
    pub is_elementary_abelian_2: bool,
}

pub fn recognize(q: &FiniteGroup) -> StructureFlags {
    let n = q.order();
    let orders: Vec<usize> = (0..n).map(|a| q.element_order(a).expect("in range")).collect();
    let is_cyclic = orders.contains(&n);
    let p_group = prime_power(n as u64).map(|(p, _)| p);
    StructureFlags {
        is_cyclic,
        p_group,
        is_cyclic_p_group_or_trivial: n == 1 || (is_cyclic && p_group.is_some()),
        is_elementary_abelian_2: orders[1..].iter().all(|&o| o == 2),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_group, GroupSpec};

    fn group(s: &str) -> FiniteGroup {
        make_group(&s.parse::<GroupSpec>().unwrap()).unwrap()
    }

    /// Power-set oracle for small groups.
    fn brute_subgroups(g: &FiniteGroup) -> Vec<Vec<Element>> {
        let n = g.order();
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            if mask & 1 == 0 {
                continue;
            }
            let els: Vec<Element> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let closed = els
                .iter()
                .all(|&a| els.iter().all(|&b| mask >> g.mul(a, b) & 1 == 1));
            if closed {
                out.push(els);
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    #[test]
    fn generated_examples() {
        let g = group("Z8");
        assert_eq!(generated_subgroup(&g, &[]).unwrap().elements(), &[0]);
        assert_eq!(generated_subgroup(&g, &[2]).unwrap().elements(), &[0, 2, 4, 6]);
        let s3 = group("S3");
        let transposition = (1..6).find(|&a| s3.element_order(a).unwrap() == 2).unwrap();
        let three_cycle = (1..6).find(|&a| s3.element_order(a).unwrap() == 3).unwrap();
        assert_eq!(generated_subgroup(&s3, &[transposition, three_cycle]).unwrap().order(), 6);
        assert!(generated_subgroup(&g, &[8]).is_err());
    }

    #[test]
    fn normality() {
        let z12 = group("Z12");
        for h in all_subgroups(&z12).unwrap() {
            assert!(is_normal(&z12, &h).unwrap());
        }
        let s3 = group("S3");
        let t = (1..6).find(|&a| s3.element_order(a).unwrap() == 2).unwrap();
        let ht = generated_subgroup(&s3, &[t]).unwrap();
        // conjugation oracle
        let oracle = (0..6).all(|x| {
            let c = s3.mul(s3.mul(x, t), s3.inverse(x));
            ht.contains(c)
        });
        assert!(!oracle);
        assert!(!is_normal(&s3, &ht).unwrap());
        let c = (1..6).find(|&a| s3.element_order(a).unwrap() == 3).unwrap();
        assert!(is_normal(&s3, &generated_subgroup(&s3, &[c]).unwrap()).unwrap());
        let z4 = group("Z4");
        let foreign = generated_subgroup(&z4, &[2]).unwrap();
        assert_eq!(is_normal(&s3, &foreign), Err(GroupError::ForeignSubgroup));
    }

    #[test]
    fn normal_subgroup_lists() {
        let trivial = all_normal_subgroups(&group("Z1")).unwrap();
        assert_eq!(trivial.len(), 1);
        let z4 = all_normal_subgroups(&group("Z4")).unwrap();
        let els: Vec<&[Element]> = z4.iter().map(|h| h.elements()).collect();
        assert_eq!(els, vec![&[0][..], &[0, 2][..], &[0, 1, 2, 3][..]]);
        let s3 = all_normal_subgroups(&group("S3")).unwrap();
        assert_eq!(s3.iter().map(|h| h.order()).collect::<Vec<_>>(), vec![1, 3, 6]);
        assert_eq!(all_subgroups(&group("S3")).unwrap().len(), 6);
    }

    #[test]
    fn enumeration_matches_power_set() {
        for s in ["Z1", "Z6", "Z8", "S3", "D4", "Q8", "Z2xZ4", "E(2,3)", "Z12", "D6"] {
            let g = group(s);
            let fast: Vec<Vec<Element>> = all_subgroups(&g)
                .unwrap()
                .iter()
                .map(|h| h.elements().to_vec())
                .collect();
            assert_eq!(fast, brute_subgroups(&g), "{s}");
        }
    }

    #[test]
    fn known_subgroup_counts() {
        assert_eq!(all_subgroups(&group("E(2,4)")).unwrap().len(), 67);
        assert_eq!(all_subgroups(&group("S4")).unwrap().len(), 30);
        assert_eq!(all_normal_subgroups(&group("S4")).unwrap().len(), 4);
        assert_eq!(all_normal_subgroups(&group("D4")).unwrap().len(), 6);
        assert_eq!(all_normal_subgroups(&group("Q8")).unwrap().len(), 6);
    }

    #[test]
    fn cyclic_subgroup_count_is_divisor_count() {
        for n in 1..=64usize {
            let divisors = (1..=n).filter(|d| n % d == 0).count();
            let g = group(&format!("Z{n}"));
            assert_eq!(all_normal_subgroups(&g).unwrap().len(), divisors, "Z{n}");
        }
    }

    #[test]
    fn quotient_examples() {
        let z6 = group("Z6");
        let q = quotient(&z6, &generated_subgroup(&z6, &[]).unwrap()).unwrap();
        assert_eq!(q.group().order(), 6);
        assert_eq!(q.projection(), &[0, 1, 2, 3, 4, 5]);
        assert!(recognize(q.group()).is_cyclic && recognize(&z6).is_cyclic);

        let z4 = group("Z4");
        let q = quotient(&z4, &generated_subgroup(&z4, &[2]).unwrap()).unwrap();
        assert_eq!(q.group().order(), 2);
        assert_eq!(q.projection(), &[0, 1, 0, 1]);
        assert_eq!(q.representatives(), &[0, 1]);

        let d4 = group("D4");
        let center = generated_subgroup(&d4, &[2]).unwrap();
        assert_eq!(center.elements(), &[0, 2]);
        let q = quotient(&d4, &center).unwrap();
        assert_eq!(q.group().order(), 4);
        assert!(recognize(q.group()).is_elementary_abelian_2);
        for c in 0..4 {
            assert_eq!(q.projection().iter().filter(|&&x| x == c).count(), 2);
        }
        for a in 0..8 {
            for b in 0..8 {
                assert_eq!(
                    q.project(d4.mul(a, b)),
                    q.group().mul(q.project(a), q.project(b))
                );
            }
        }

        let s3 = group("S3");
        let t = (1..6).find(|&a| s3.element_order(a).unwrap() == 2).unwrap();
        assert!(matches!(
            quotient(&s3, &generated_subgroup(&s3, &[t]).unwrap()),
            Err(GroupError::NotNormal(_))
        ));
    }

    #[test]
    fn recognition() {
        let f = recognize(&group("Z1"));
        assert!(f.is_cyclic && f.is_cyclic_p_group_or_trivial && f.p_group.is_none());
        let f = recognize(&group("Z9"));
        assert!(f.is_cyclic_p_group_or_trivial);
        assert_eq!(f.p_group, Some(3));
        let f = recognize(&group("Z2xZ2"));
        assert!(!f.is_cyclic && f.is_elementary_abelian_2 && !f.is_cyclic_p_group_or_trivial);
        assert_eq!(f.p_group, Some(2));
        let f = recognize(&group("Z6"));
        assert!(f.is_cyclic && !f.is_cyclic_p_group_or_trivial);
        assert!(!recognize(&group("Q8")).is_cyclic);
    }

    #[test]
    fn descriptions() {
        let z12 = group("Z12");
        assert_eq!(generated_subgroup(&z12, &[6]).unwrap().description(), "<6>");
        assert_eq!(generated_subgroup(&z12, &[8, 6]).unwrap().description(), "<2>");
        assert_eq!(generated_subgroup(&z12, &[]).unwrap().description(), "{e}");
        let v = group("Z2xZ2");
        assert_eq!(generated_subgroup(&v, &[3, 1]).unwrap().description(), "<(0,1),(1,0)>");
    }
}
