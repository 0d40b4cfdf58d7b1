use thiserror::Error;

use crate::face::Face;
use crate::matroid::ExchangeViolation;
use crate::shelling::ShellingFailure;

/// Everything that can go wrong when calling into the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("label {0} is outside the supported range 1..=64")]
    LabelOutOfRange(u32),

    #[error("label {label} is not in the ground set")]
    LabelNotInGround { label: u32 },

    #[error("duplicate label {0} in face")]
    DuplicateLabel(u32),

    #[error("ground set must contain between 1 and 64 elements")]
    InvalidGround,

    #[error("face {0} not in complex")]
    FaceNotInComplex(Face),

    #[error("deleting the empty face is not supported")]
    EmptyFaceDeletion,

    #[error("faces have different sizes ({0} and {1})")]
    SizeMismatch(usize, usize),

    #[error("complex is not pure: facets of cardinality {0} and {1}")]
    NonPure(usize, usize),

    #[error("dimension {d} is too large for a ground set of {n} elements")]
    DimensionTooLarge { n: usize, d: usize },

    #[error("complex is full: nothing missing")]
    NothingMissing,

    #[error("sequence is not a permutation of the facets: {0}")]
    NotPermutation(String),

    #[error("prefix is not a valid shelling: {0}")]
    InvalidPrefix(ShellingFailure),

    #[error("linear order is not a bijection onto the ground set")]
    InvalidOrder,

    #[error("{0}")]
    Precondition(String),

    #[error("complement correspondence requires codimension 2 (n = {n}, facet size {rank})")]
    NotCodimensionTwo { n: usize, rank: usize },

    #[error("complex is not shellable")]
    NotShellable,

    #[error("not a matroid: {0}")]
    NotMatroid(ExchangeViolation),

    #[error("complex is not vertex decomposable")]
    NotVertexDecomposable,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("search space too large: {0}")]
    TooLarge(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
