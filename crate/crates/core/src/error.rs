use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rational with zero denominator")]
    ZeroDenominator,
    #[error("malformed rational `{0}` (expected `p/q` or an integer)")]
    MalformedRational(String),

    #[error("k must be at least {min}, got {k}")]
    InvalidK { k: u32, min: u32 },
    #[error("expected {expected} orders for k={k}, got {got}")]
    WrongOrderCount { k: u32, expected: usize, got: usize },
    #[error("invalid vertex name `{0}`")]
    InvalidName(String),
    #[error("duplicate vertex name `{0}`")]
    DuplicateName(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("vertex index {index} out of range for {n} vertices")]
    VertexOutOfRange { index: usize, n: usize },
    #[error("order {order} is not a permutation of the vertex set")]
    NotAPermutation { order: usize },
    #[error("a vertex cannot be compared with itself")]
    SameVertex,

    #[error("pair ({u}, {v}) has {count} arcs, expected exactly one")]
    BadArcCount { u: usize, v: usize, count: usize },
    #[error("arc weight {weight} outside [{k}, {max}]", max = 2 * k - 1)]
    WeightOutOfRange { weight: u32, k: u32 },

    #[error("vertex set is not dominating")]
    NotDominating,
    #[error("vertex set is empty")]
    EmptySet,
    #[error("vertex {0} belongs to the set")]
    VertexInSet(usize),
    #[error("set size {j} out of range 0..={n}")]
    SizeOutOfRange { j: usize, n: usize },
    #[error("{n} vertices exceeds the enumeration limit of {limit}; pass the limit override to proceed")]
    OverLimit { n: usize, limit: usize },

    #[error("clockwise tournament needs at least one vertex")]
    EmptyClockwise,
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("set must be a proper subset of the vertex set")]
    NotProperSubset,
    #[error("block orders do not partition the vertex set: {0}")]
    BadBlocks(String),

    #[error("q = {q} outside the admissible range [{lo}, {hi}]")]
    QOutOfRange { q: Rational, lo: Rational, hi: Rational },
    #[error("q = {0} must be an integer or have fractional part 1/2")]
    NotHalfInteger(Rational),

    #[error("search budget exceeded: {needed} order tuples needed, limit {limit}")]
    BudgetExceeded { needed: u128, limit: u128 },
    #[error("search time limit reached")]
    TimeLimit,
    #[error("search stopped after fully scanning up to {last_complete} vertices: {cause}")]
    SearchIncomplete { last_complete: usize, cause: Box<Error> },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
