use thiserror::Error;

use crate::bijection::Kind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("affine symmetric group needs n >= 3, got {0}")]
    RankTooSmall(usize),
    #[error("m must be at least 1")]
    ZeroM,
    #[error("generator index {index} out of range for n = {n}")]
    GeneratorOutOfRange { index: usize, n: usize },
    #[error("one-line word is not a permutation of 1..={0}")]
    NotAPermutation(usize),
    #[error("invalid transposition ({i}, {j}) for n = {n}")]
    InvalidTransposition { i: usize, j: usize, n: usize },
    #[error("entries are not a transversal of the residues mod {0}")]
    NotTransversal(usize),
    #[error("entries sum to {got}, expected {expected}")]
    BadSum { got: i64, expected: i64 },
    #[error("point coordinates do not sum to zero")]
    PointNotInV,
    #[error("parts must be positive and weakly decreasing")]
    InvalidPartition,
    #[error("partition is not a {0}-core")]
    NotCore(usize),
    #[error("box (row {row}, column {col}) is outside the diagram")]
    BoxOutside { row: usize, col: usize },
    #[error("abacus runners are not flush")]
    NotFlush,
    #[error("n-set spread {spread} is not below {bound}")]
    OutsideFundamentalSet { spread: i64, bound: i64 },
    #[error("alcove is not {0} in its Shi region")]
    NotExtremal(Kind),
    #[error("alcove is not dominant")]
    NotDominant,
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("window is not strictly ascending")]
    NotAscending,
}

pub type Result<T> = core::result::Result<T, Error>;
