//! Error type shared by every module of the toolkit.

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    // graph construction
    #[error("syntax error at line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("invalid label {label} for pair ({i},{j}): labels must be >= 2 and off-diagonal")]
    InvalidLabel { i: usize, j: usize, label: String },
    #[error("conflicting labels for pair ({i},{j})")]
    DuplicatePair { i: usize, j: usize },
    #[error("vertex index {index} out of range 1..={n}")]
    VertexOutOfRange { index: usize, n: usize },
    #[error("unknown catalog name {0:?}")]
    UnknownName(String),
    #[error("rank {rank} out of range for family {family}")]
    RankOutOfRange { family: String, rank: usize },

    // exact algebra
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("specialization value {0} is not a unit (must be 1 or -1)")]
    NonUnitValue(i64),
    #[error("matrix is not unimodular (det = {det})")]
    NotUnimodular { det: String },
    #[error("modulus {0} is too small (must be >= 2)")]
    BadModulus(u64),

    // representations
    #[error("graph {0:?} is not small: exact arithmetic needs all labels in {{2,3,inf}}")]
    NotSmall(String),
    #[error("strand/index pair out of range: n={n}, i={i}")]
    IndexOutOfRange { n: usize, i: usize },

    // words and enumeration
    #[error("word letter {0} does not address a vertex of the graph")]
    BadIndex(i64),
    #[error("inverse letter {0} is not allowed in a Coxeter-mode word")]
    InverseInCoxeterMode(i64),
    #[error("word mode does not match the target representation")]
    ModeMismatch,
    #[error("enumeration exceeded the cap of {cap} elements")]
    CapExceeded { cap: u64 },
    #[error("graph {0:?} is not spherical")]
    NotSpherical(String),
    #[error("graph {0:?} is not connected")]
    NotConnected(String),

    // congruence
    #[error("invalid word for this query: {0}")]
    BadWord(String),
    #[error("generator indices out of range or equal: k={k}, l={l}")]
    BadIndices { k: usize, l: usize },

    // root systems and affine families
    #[error("graph {0:?} is not of type A, D or E")]
    NotAde(String),
    #[error("graph {0:?} is not the affine extension of an A/D/E catalog graph")]
    NotAffineAde(String),
    #[error("stored reflection word failed validation for {graph:?}: {detail}")]
    TableInconsistent { graph: String, detail: String },
    #[error("level {0} is too small for the closed form (needs m >= 3)")]
    BadLevel(u64),
    #[error("unknown central-element family {0:?}")]
    UnknownType(String),

    #[error("{0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
