use thiserror::Error;

use crate::simplicial::Simplex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("simplex must have at least one vertex")]
    EmptySimplex,
    #[error("simplex vertices must be nondecreasing: {0:?}")]
    UnorderedVertices(Vec<i64>),
    #[error("degenerate simplex {0} where a nondegenerate one is required")]
    Degenerate(Simplex),
    #[error("index {index} out of range for a simplex of dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("simplex {0} is not in the complex")]
    NotInComplex(Simplex),
    #[error("support simplex {0} is not in the complex")]
    SupportNotInComplex(Simplex),
    #[error("expected dimension {expected}, found {found}")]
    DimensionMismatch { expected: i64, found: i64 },
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),
    #[error("operation requires Z_2 coefficients, got {0}")]
    NotMod2(String),
    #[error("invalid index tuple {indices:?} for m = {m}")]
    InvalidTuple { indices: Vec<i64>, m: i64 },
    #[error("word pair does not come from a split: {0}")]
    MalformedPair(String),
    #[error("not a cocycle")]
    NotACocycle,
}

pub type Result<T> = std::result::Result<T, Error>;
