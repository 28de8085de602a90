//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("permutation size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("not a bijection on {{0,…,{degree}-1}}: {images:?}")]
    NotABijection { degree: usize, images: Vec<usize> },

    #[error("relations do not define a partial order (cycle through element {witness})")]
    NotAPartialOrder { witness: usize },

    #[error("group does not act on the poset by automorphisms: element {g} maps related pair ({p},{q}) to an unrelated pair")]
    InvalidOrderAction { g: String, p: usize, q: usize },

    #[error("group does not act on the graph by automorphisms: element {g} maps edge ({u},{v}) to a non-edge")]
    InvalidGraphAction { g: String, u: usize, v: usize },

    #[error("invalid action on a set of size {size}: {detail}")]
    InvalidAction { size: usize, detail: String },

    #[error("cyclic orientation: edge ({u},{v}) lies on a directed cycle")]
    CyclicOrientation { u: usize, v: usize },

    #[error("orientation head {head} is not an endpoint of edge ({u},{v})")]
    BadOrientationHead { head: usize, u: usize, v: usize },

    #[error("quotient consistency violation: cycle {cycle:?} is not an antichain")]
    CycleNotAntichain { cycle: Vec<usize> },

    #[error("Burnside average is not an integer: sum {sum} over group order {order}")]
    NonIntegralBurnside { sum: String, order: usize },

    #[error("duplicate interpolation abscissa {x}")]
    DuplicateAbscissa { x: i64 },

    #[error("polynomial degree assertion failed: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: String },

    #[error("computation routes disagree at n = {n}: formula {formula}, oracle {oracle}")]
    RouteMismatch { n: i64, formula: String, oracle: String },

    #[error("enumeration budget exceeded: would enumerate about {estimate} objects, budget is {budget}")]
    BudgetExceeded { estimate: u128, budget: u64 },

    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("unknown element name {name:?} in cycle notation")]
    UnknownElement { name: String },

    #[error("element {name:?} appears more than once in one generator")]
    RepeatedElement { name: String },

    #[error("bad cycle notation: {0}")]
    BadCycleSyntax(String),

    #[error("group degree {group} does not match element count {expected}")]
    DegreeInputMismatch { group: usize, expected: usize },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
