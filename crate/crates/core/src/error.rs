use thiserror::Error;

use crate::group::Element;

/// Errors raised while building or querying groups, subgroups and quotients.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("Cayley table is empty")]
    EmptyTable,
    #[error("Cayley table is not square: row {row} has {len} entries, expected {order}")]
    NotSquare { row: usize, len: usize, order: usize },
    #[error("entry {value} at ({row}, {col}) is out of range for a group of order {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("row {0} of the Cayley table is not a permutation")]
    RowNotPermutation(usize),
    #[error("column {0} of the Cayley table is not a permutation")]
    ColumnNotPermutation(usize),
    #[error("Cayley table has no two-sided identity")]
    NoIdentity,
    #[error("operation is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: Element, b: Element, c: Element },
    #[error("label count {labels} does not match group order {order}")]
    LabelCount { labels: usize, order: usize },
    #[error("element {element} is out of range for a group of order {order}")]
    ElementOutOfRange { element: Element, order: usize },
    #[error("group order {order} exceeds the size budget of {max}")]
    SizeBudget { order: u128, max: usize },
    #[error("symmetric group degree {degree} exceeds the budget of {max}")]
    SymmetricDegreeBudget { degree: usize, max: usize },
    #[error("invalid group parameters: {0}")]
    InvalidParameter(String),
    #[error("cannot parse group spec {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("euler_phi is undefined for 0")]
    PhiOfZero,
    #[error("subgroup belongs to a different group")]
    ForeignSubgroup,
    #[error("subgroup {0} is not normal")]
    NotNormal(String),
    #[error("the subgroup is the whole group; the graph would be degenerate")]
    WholeGroup,
    #[error("quotient was built from a different subgroup")]
    MismatchedQuotient,
}

/// Errors raised by graph construction and (de)serialization.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),
    #[error("vertex {vertex} is out of range for {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("self-loop at vertex {0}")]
    Loop(usize),
    #[error("the reduced power graph of the trivial group has no vertices")]
    TrivialGroup,
    #[error("malformed graph JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// An exact solver refused to run because the instance is over budget.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("{solver}: {vertices} vertices exceeds the budget of {limit}")]
    VertexBudget {
        solver: &'static str,
        vertices: usize,
        limit: usize,
    },
    #[error("{solver}: search exceeded {limit} steps")]
    StepBudget { solver: &'static str, limit: u64 },
}
