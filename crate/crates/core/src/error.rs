use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("line {line}, column {column}: unknown element label `{label}`")]
    UnknownLabel {
        line: usize,
        column: usize,
        label: String,
    },

    #[error("line {line}: ragged table `{table}`: expected {expected} entries, found {found}")]
    RaggedTable {
        line: usize,
        table: String,
        expected: usize,
        found: usize,
    },

    #[error("order is not a lattice: {x} and {y} have no unique {bound}")]
    NotALattice {
        x: String,
        y: String,
        bound: &'static str,
    },

    #[error("join/meet tables inconsistent at ({x}, {y})")]
    InconsistentJoinMeet { x: String, y: String },

    #[error("derived relation is not a partial order: {property} fails at {witness:?}")]
    NotPartialOrder {
        property: &'static str,
        witness: Vec<String>,
    },

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("order {n} exceeds the configured bound {bound}")]
    BoundExceeded { n: usize, bound: usize },

    #[error("not an ideal: {0}")]
    NotAnIdeal(String),

    #[error("not a congruence: {0}")]
    NotACongruence(String),

    #[error("induced operation `{op}` is not well defined: {witness}")]
    NotWellDefined { op: &'static str, witness: String },

    #[error("element index {0} out of range")]
    ElementOutOfRange(usize),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unknown property id `{0}`")]
    UnknownProperty(String),
}
