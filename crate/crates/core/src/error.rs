use thiserror::Error;

use crate::model::Label;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("hooked label set needs at least two vertices, got p = {0}")]
    DegenerateOrder(usize),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("labeling has {labels} labels but the graph has {vertices} vertices")]
    ShapeMismatch { labels: usize, vertices: usize },

    #[error("invalid pair system: {0}")]
    InvalidPairs(String),

    #[error("pair positions do not form the {kind} position set of order {order}: {detail}")]
    PositionSetMismatch {
        kind: String,
        order: usize,
        detail: String,
    },

    #[error("value {value} occurs {count} times; every value must occur exactly twice")]
    MultiplicityError { value: Label, count: usize },

    #[error("parse error: {0}")]
    ParseError(String),

    #[error("k and d are both even; the parity census is undefined")]
    BothEven,

    #[error("no closed form for r = {r} in this family; use the base-case table")]
    UseBaseCase { r: u64 },

    #[error("not (2,1)-hooked Skolem graceful: n ≡ 0 or 3 (mod 4)")]
    NotGraceful { n: u64 },

    #[error("constructor output failed certification for n = {n}: {detail}")]
    ConstructionBug { n: u64, detail: String },

    #[error("{what} = {value} exceeds the bound {bound}")]
    BoundExceeded {
        what: &'static str,
        value: u64,
        bound: u64,
    },

    #[error("search found a labeling for n = {n}, k = {k}, d = {d} that the parity condition rules out")]
    ContradictionDetected { n: u64, k: Label, d: Label },
}
