//! Finite groups given by validated Cayley tables.
//!
//! Every group is a table over element indices `0..n`, with index `0` fixed as
//! the identity. Groups are cheap to clone (the table is shared) and immutable
//! after construction.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::GroupError;

/// Index of a group element inside its Cayley table.
pub type Element = usize;

/// Orders above this are never checked for associativity exhaustively.
pub const MAX_VALIDATED_ORDER: usize = 256;

#[derive(Debug)]
struct GroupData {
    name: String,
    order: usize,
    table: Vec<Element>,
    inverse: Vec<Element>,
    element_order: Vec<usize>,
    labels: Vec<String>,
}

/// A finite group with a validated multiplication table.
///
/// `table[a][b] = a * b`, and element `0` is the identity.
#[derive(Clone)]
pub struct FiniteGroup {
    inner: Arc<GroupData>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.inner.name)
            .field("order", &self.inner.order)
            .finish()
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.table == other.inner.table
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Validates a Cayley table and builds a group from it.
    ///
    /// If the identity is not at index 0 the table is renumbered by swapping
    /// the identity with index 0. Labels are the original indices.
    pub fn from_cayley_table(table: &[Vec<usize>]) -> Result<Self, GroupError> {
        let labels = (0..table.len()).map(|i| i.to_string()).collect();
        Self::from_cayley_table_with_labels(format!("table{}", table.len()), labels, table)
    }

    /// Like [`FiniteGroup::from_cayley_table`] with explicit name and labels.
    pub fn from_cayley_table_with_labels(
        name: impl Into<String>,
        mut labels: Vec<String>,
        table: &[Vec<usize>],
    ) -> Result<Self, GroupError> {
        let order = table.len();
        if order == 0 {
            return Err(GroupError::EmptyTable);
        }
        if labels.len() != order {
            return Err(GroupError::LabelCount {
                labels: labels.len(),
                order,
            });
        }
        let mut flat = Vec::with_capacity(order * order);
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != order {
                return Err(GroupError::NotSquare {
                    row,
                    len: entries.len(),
                    order,
                });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= order {
                    return Err(GroupError::EntryOutOfRange {
                        row,
                        col,
                        value,
                        order,
                    });
                }
            }
            flat.extend_from_slice(entries);
        }
        check_latin(&flat, order)?;

        let identity = (0..order)
            .find(|&e| (0..order).all(|a| flat[e * order + a] == a && flat[a * order + e] == a))
            .ok_or(GroupError::NoIdentity)?;
        if identity != 0 {
            let swap = |x: usize| {
                if x == 0 {
                    identity
                } else if x == identity {
                    0
                } else {
                    x
                }
            };
            let mut renumbered = vec![0; order * order];
            for a in 0..order {
                for b in 0..order {
                    renumbered[swap(a) * order + swap(b)] = swap(flat[a * order + b]);
                }
            }
            flat = renumbered;
            labels.swap(0, identity);
        }
        Self::from_validated_latin(name.into(), labels, flat)
    }

    /// Builds a group from a multiplication closure; identity must be 0.
    pub(crate) fn from_fn(
        name: String,
        labels: Vec<String>,
        mul: impl Fn(Element, Element) -> Element,
    ) -> Result<Self, GroupError> {
        let order = labels.len();
        let mut flat = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                flat.push(mul(a, b));
            }
        }
        if let Some(&value) = flat.iter().find(|&&v| v >= order) {
            let pos = flat.iter().position(|&v| v == value).unwrap_or(0);
            return Err(GroupError::EntryOutOfRange {
                row: pos / order,
                col: pos % order,
                value,
                order,
            });
        }
        check_latin(&flat, order)?;
        if (0..order).any(|a| flat[a] != a || flat[a * order] != a) {
            return Err(GroupError::NoIdentity);
        }
        Self::from_validated_latin(name, labels, flat)
    }

    /// Finishes construction of a Latin square whose identity sits at 0.
    fn from_validated_latin(
        name: String,
        labels: Vec<String>,
        table: Vec<Element>,
    ) -> Result<Self, GroupError> {
        let order = labels.len();
        {
            let mut seen = HashMap::with_capacity(order);
            for l in &labels {
                if seen.insert(l.as_str(), ()).is_some() {
                    return Err(GroupError::InvalidParameter(format!(
                        "duplicate element label {l:?}"
                    )));
                }
            }
        }
        if order > MAX_VALIDATED_ORDER {
            return Err(GroupError::SizeBudget {
                order: order as u128,
                max: MAX_VALIDATED_ORDER,
            });
        }
        for a in 0..order {
            for b in 0..order {
                let ab = table[a * order + b];
                let row_ab = ab * order;
                for c in 0..order {
                    let bc = table[b * order + c];
                    if table[row_ab + c] != table[a * order + bc] {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        // Latin rows guarantee exactly one b with a*b = 0.
        let inverse = (0..order)
            .map(|a| {
                (0..order)
                    .find(|&b| table[a * order + b] == 0)
                    .expect("Latin row contains the identity")
            })
            .collect();
        let element_order = (0..order)
            .map(|a| {
                let mut k = 1;
                let mut x = a;
                while x != 0 {
                    x = table[x * order + a];
                    k += 1;
                }
                k
            })
            .collect();
        Ok(Self {
            inner: Arc::new(GroupData {
                name,
                order,
                table,
                inverse,
                element_order,
                labels,
            }),
        })
    }

    pub fn name(&self) -> &str {
        &self.inner.name
    }

    pub fn order(&self) -> usize {
        self.inner.order
    }

    pub fn identity(&self) -> Element {
        0
    }

    pub fn labels(&self) -> &[String] {
        &self.inner.labels
    }

    /// Label of element `a`. Panics if `a` is out of range.
    pub fn label(&self, a: Element) -> &str {
        &self.inner.labels[a]
    }

    /// Looks an element up by its label.
    pub fn element_by_label(&self, label: &str) -> Option<Element> {
        self.inner.labels.iter().position(|l| l == label)
    }

    /// `a * b`. Panics if either index is out of range.
    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        let n = self.inner.order;
        assert!(a < n && b < n, "element out of range");
        self.inner.table[a * n + b]
    }

    /// Inverse of `a`. Panics if `a` is out of range.
    #[inline]
    pub fn inverse(&self, a: Element) -> Element {
        self.inner.inverse[a]
    }

    /// The Cayley table as rows.
    pub fn table(&self) -> Vec<Vec<Element>> {
        self.inner
            .table
            .chunks(self.inner.order)
            .map(|r| r.to_vec())
            .collect()
    }

    pub fn check_element(&self, a: Element) -> Result<(), GroupError> {
        if a < self.inner.order {
            Ok(())
        } else {
            Err(GroupError::ElementOutOfRange {
                element: a,
                order: self.inner.order,
            })
        }
    }

    /// Least `k >= 1` with `a^k = e`.
    pub fn element_order(&self, a: Element) -> Result<usize, GroupError> {
        self.check_element(a)?;
        Ok(self.inner.element_order[a])
    }

    /// `a^k` by square-and-multiply; `a^0` is the identity.
    pub fn element_power(&self, a: Element, k: u64) -> Result<Element, GroupError> {
        self.check_element(a)?;
        Ok(self.pow(a, k))
    }

    pub(crate) fn pow(&self, a: Element, mut k: u64) -> Element {
        let mut base = a;
        let mut acc = 0;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Elements of the cyclic subgroup `<a>` in the order `a, a^2, ..., e`.
    pub fn powers(&self, a: Element) -> Vec<Element> {
        let mut out = Vec::with_capacity(self.inner.element_order[a]);
        let mut x = a;
        loop {
            out.push(x);
            if x == 0 {
                break;
            }
            x = self.mul(x, a);
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.inner.order;
        (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

/// Euler's totient, by trial-division factorization.
pub fn euler_phi(n: u64) -> Result<u64, GroupError> {
    if n == 0 {
        return Err(GroupError::PhiOfZero);
    }
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    Ok(result)
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// `Some((p, k))` if `n = p^k` with `p` prime and `k >= 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let mut m = n;
    let mut k = 0;
    while m.is_multiple_of(p) {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

fn check_latin(flat: &[Element], order: usize) -> Result<(), GroupError> {
    let mut seen = vec![usize::MAX; order];
    for row in 0..order {
        for col in 0..order {
            let v = flat[row * order + col];
            if seen[v] == row {
                return Err(GroupError::RowNotPermutation(row));
            }
            seen[v] = row;
        }
    }
    seen.fill(usize::MAX);
    for col in 0..order {
        for row in 0..order {
            let v = flat[row * order + col];
            if seen[v] == col {
                return Err(GroupError::ColumnNotPermutation(col));
            }
            seen[v] = col;
        }
    }
    Ok(())
}

/// Size limits applied before a group is built.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupBudget {
    pub max_order: usize,
    pub max_symmetric_degree: usize,
}

impl Default for GroupBudget {
    fn default() -> Self {
        Self {
            max_order: MAX_VALIDATED_ORDER,
            max_symmetric_degree: 5,
        }
    }
}

/// A named family of groups, parsed from strings like `Z12`, `D4`, `S4`,
/// `Q8`, `E(2,3)` and products such as `Z2xZ4`.
///
/// Grammar (no whitespace, case-sensitive):
///
/// ```text
/// spec    := factor ( "x" factor )*
/// factor  := "Z" int | "D" int | "S" int | "Q8" | "E(" int "," int ")"
/// int     := [0-9]+
/// ```
///
/// `Dn` is the dihedral group of order `2n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Quaternion8,
    ElementaryAbelian { p: usize, k: usize },
    DirectProduct(Vec<GroupSpec>),
}

impl GroupSpec {
    /// Group order, or `None` on overflow.
    pub fn order(&self) -> Option<u128> {
        match self {
            GroupSpec::Cyclic(n) => Some(*n as u128),
            GroupSpec::Dihedral(n) => (*n as u128).checked_mul(2),
            GroupSpec::Symmetric(n) => (1..=*n as u128).try_fold(1u128, |acc, i| acc.checked_mul(i)),
            GroupSpec::Quaternion8 => Some(8),
            GroupSpec::ElementaryAbelian { p, k } => (*p as u128).checked_pow(u32::try_from(*k).ok()?),
            GroupSpec::DirectProduct(children) => children
                .iter()
                .try_fold(1u128, |acc, c| acc.checked_mul(c.order()?)),
        }
    }

    fn check(&self, budget: &GroupBudget) -> Result<(), GroupError> {
        match self {
            GroupSpec::Cyclic(0) | GroupSpec::Dihedral(0) | GroupSpec::Symmetric(0) => {
                return Err(GroupError::InvalidParameter(format!(
                    "{self}: parameter must be positive"
                )))
            }
            GroupSpec::Symmetric(n) if *n > budget.max_symmetric_degree => {
                return Err(GroupError::SymmetricDegreeBudget {
                    degree: *n,
                    max: budget.max_symmetric_degree,
                })
            }
            GroupSpec::ElementaryAbelian { p, k } => {
                if !is_prime(*p as u64) {
                    return Err(GroupError::InvalidParameter(format!("E({p},{k}): {p} is not prime")));
                }
                if *k == 0 {
                    return Err(GroupError::InvalidParameter(format!(
                        "E({p},{k}): rank must be positive"
                    )));
                }
            }
            GroupSpec::DirectProduct(children) => {
                if children.is_empty() {
                    return Err(GroupError::InvalidParameter("empty direct product".into()));
                }
                for c in children {
                    c.check(budget)?;
                }
            }
            _ => {}
        }
        match self.order() {
            Some(o) if o <= budget.max_order as u128 => Ok(()),
            Some(o) => Err(GroupError::SizeBudget {
                order: o,
                max: budget.max_order,
            }),
            None => Err(GroupError::SizeBudget {
                order: u128::MAX,
                max: budget.max_order,
            }),
        }
    }

    fn flatten_into(&self, out: &mut Vec<GroupSpec>) {
        match self {
            GroupSpec::DirectProduct(children) => children.iter().for_each(|c| c.flatten_into(out)),
            other => out.push(other.clone()),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "Z{n}"),
            GroupSpec::Dihedral(n) => write!(f, "D{n}"),
            GroupSpec::Symmetric(n) => write!(f, "S{n}"),
            GroupSpec::Quaternion8 => f.write_str("Q8"),
            GroupSpec::ElementaryAbelian { p, k } => write!(f, "E({p},{k})"),
            GroupSpec::DirectProduct(_) => {
                let mut flat = Vec::new();
                self.flatten_into(&mut flat);
                for (i, c) in flat.iter().enumerate() {
                    if i > 0 {
                        f.write_str("x")?;
                    }
                    write!(f, "{c}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for GroupSpec {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| GroupError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        if s.is_empty() {
            return Err(err("empty spec"));
        }
        let parse_int = |digits: &str| -> Result<usize, GroupError> {
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err(&format!("expected a number, found {digits:?}")));
            }
            digits
                .parse()
                .map_err(|_| err(&format!("number {digits:?} is too large")))
        };
        let mut factors = Vec::new();
        for part in s.split('x') {
            let factor = if let Some(rest) = part.strip_prefix('Z') {
                GroupSpec::Cyclic(parse_int(rest)?)
            } else if let Some(rest) = part.strip_prefix('D') {
                GroupSpec::Dihedral(parse_int(rest)?)
            } else if let Some(rest) = part.strip_prefix('S') {
                GroupSpec::Symmetric(parse_int(rest)?)
            } else if part == "Q8" {
                GroupSpec::Quaternion8
            } else if let Some(rest) = part.strip_prefix("E(").and_then(|r| r.strip_suffix(')')) {
                let (p, k) = rest
                    .split_once(',')
                    .ok_or_else(|| err("expected E(p,k)"))?;
                GroupSpec::ElementaryAbelian {
                    p: parse_int(p)?,
                    k: parse_int(k)?,
                }
            } else if part.is_empty() {
                return Err(err("empty factor"));
            } else {
                return Err(err(&format!("unknown factor {part:?}")));
            };
            factors.push(factor);
        }
        Ok(if factors.len() == 1 {
            factors.pop().expect("one factor")
        } else {
            GroupSpec::DirectProduct(factors)
        })
    }
}

/// Builds the group named by `spec` under the default budget.
pub fn make_group(spec: &GroupSpec) -> Result<FiniteGroup, GroupError> {
    make_group_with_budget(spec, &GroupBudget::default())
}

pub fn make_group_with_budget(
    spec: &GroupSpec,
    budget: &GroupBudget,
) -> Result<FiniteGroup, GroupError> {
    spec.check(budget)?;
    let name = spec.to_string();
    match spec {
        GroupSpec::Cyclic(n) => cyclic(name, *n),
        GroupSpec::Dihedral(n) => dihedral(name, *n),
        GroupSpec::Symmetric(n) => symmetric(name, *n),
        GroupSpec::Quaternion8 => quaternion8(name),
        GroupSpec::ElementaryAbelian { p, k } => {
            product(name, &vec![GroupSpec::Cyclic(*p); *k], budget)
        }
        GroupSpec::DirectProduct(_) => {
            let mut flat = Vec::new();
            spec.flatten_into(&mut flat);
            product(name, &flat, budget)
        }
    }
}

fn cyclic(name: String, n: usize) -> Result<FiniteGroup, GroupError> {
    let labels = (0..n).map(|i| i.to_string()).collect();
    FiniteGroup::from_fn(name, labels, |a, b| (a + b) % n)
}

/// Rotations `r^i` are `0..n`, reflections `r^i s` are `n..2n`.
fn dihedral(name: String, n: usize) -> Result<FiniteGroup, GroupError> {
    let rot = |i: usize| match i {
        0 => String::new(),
        1 => "r".to_string(),
        _ => format!("r^{i}"),
    };
    let labels = (0..2 * n)
        .map(|x| {
            if x == 0 {
                "e".to_string()
            } else if x < n {
                rot(x)
            } else {
                format!("{}s", rot(x - n))
            }
        })
        .collect();
    FiniteGroup::from_fn(name, labels, |a, b| {
        let (i, f) = (a % n, a / n);
        let (j, g) = (b % n, b / n);
        // r^i s^f r^j s^g = r^(i + (-1)^f j) s^(f+g)
        let k = if f == 0 { (i + j) % n } else { (i + n - j) % n };
        k + n * ((f + g) % 2)
    })
}

/// Permutations of `0..n` in lexicographic order; `(a*b)(x) = a(b(x))`.
fn symmetric(name: String, n: usize) -> Result<FiniteGroup, GroupError> {
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        perms.push(current.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).expect("pivot");
        current.swap(i - 1, j);
        current[i..].reverse();
    }
    let index: HashMap<Vec<usize>, usize> =
        perms.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let labels = perms.iter().map(|p| cycle_notation(p)).collect();
    FiniteGroup::from_fn(name, labels, |a, b| {
        let composed: Vec<usize> = perms[b].iter().map(|&x| perms[a][x]).collect();
        index[&composed]
    })
}

fn cycle_notation(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        let mut first = true;
        while !seen[x] {
            seen[x] = true;
            if !first {
                out.push(' ');
            }
            out.push_str(&(x + 1).to_string());
            first = false;
            x = perm[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push('e');
    }
    out
}

/// Index `2u + s` for unit `u` in `1, i, j, k` and sign bit `s`.
fn quaternion8(name: String) -> Result<FiniteGroup, GroupError> {
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    // unit products: (unit, negated)
    const UNIT: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    FiniteGroup::from_fn(name, labels, |a, b| {
        let (u, sa) = (a / 2, a % 2 == 1);
        let (v, sb) = (b / 2, b % 2 == 1);
        let (w, neg) = UNIT[u][v];
        2 * w + usize::from(sa ^ sb ^ neg)
    })
}

/// Mixed-radix product with the first factor most significant.
fn product(name: String, factors: &[GroupSpec], budget: &GroupBudget) -> Result<FiniteGroup, GroupError> {
    let groups = factors
        .iter()
        .map(|f| make_group_with_budget(f, budget))
        .collect::<Result<Vec<_>, _>>()?;
    let radices: Vec<usize> = groups.iter().map(FiniteGroup::order).collect();
    let order: usize = radices.iter().product();
    let digits = |mut x: usize| -> Vec<usize> {
        let mut d = vec![0; radices.len()];
        for (slot, r) in d.iter_mut().zip(&radices).rev() {
            *slot = x % r;
            x /= r;
        }
        d
    };
    let labels = (0..order)
        .map(|x| {
            let parts: Vec<&str> = digits(x)
                .iter()
                .zip(&groups)
                .map(|(&d, g)| g.label(d))
                .collect();
            format!("({})", parts.join(","))
        })
        .collect();
    FiniteGroup::from_fn(name, labels, |a, b| {
        digits(a)
            .iter()
            .zip(digits(b))
            .zip(&groups)
            .fold(0, |acc, ((&x, y), g)| acc * g.order() + g.mul(x, y))
    })
}
