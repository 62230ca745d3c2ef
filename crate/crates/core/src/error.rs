use num_bigint::BigInt;
use thiserror::Error;

use crate::grothendieck::RelationSource;
use crate::validation::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("angle arity mismatch: expected {expected} vertices, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("group is infinite (free rank {free_rank})")]
    InfiniteGroup { free_rank: usize },

    #[error("group order {order} exceeds the bound {bound}")]
    OrderBound { order: BigInt, bound: BigInt },

    #[error("homomorphism not well defined: relation {witness:?} does not map into the target relations")]
    NotWellDefined { witness: Vec<BigInt> },

    #[error("induced map not well defined: {origin} maps to {image:?}, outside the target relations")]
    RelationNotPreserved { origin: RelationSource, image: Vec<BigInt> },

    #[error("invalid embedding: {}", join(.0))]
    InvalidEmbedding(Vec<Violation>),

    #[error("n = {n} is even; the classification is only available for odd n")]
    EvenNUnsupported { n: usize },

    #[error("invalid presentation: {}", join(.0))]
    InvalidPresentation(Vec<Violation>),

    #[error("invalid tensor structure: {}", join(.0))]
    InvalidTensor(Vec<Violation>),

    #[error("slot {slot} out of range 1..={n}")]
    SlotOutOfRange { slot: usize, n: usize },

    #[error("vector is not the canonical representative of a group element")]
    NotAnElement,

    #[error("lattice does not contain the relation lattice")]
    NotASuperlattice,

    #[error("object multiplicity must be nonnegative, found {0}")]
    NegativeMultiplicity(BigInt),

    #[error("multiplicity {0} does not fit in 64 bits")]
    Overflow(BigInt),
}

fn join(v: &[Violation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}
