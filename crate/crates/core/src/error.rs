use thiserror::Error;

use crate::constructions::QuintupleViolation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("linear system has no solution")]
    Unsolvable,
    #[error("subspace is not contained in the given superspace")]
    NotContained,
    #[error("subspace is not a {0} ideal")]
    NotAnIdeal(&'static str),
    #[error("subspace is not closed under the bracket")]
    NotClosed,
    #[error("algebra is not a Lie algebra")]
    NotLie,
    #[error("algebra is not a left Leibniz algebra")]
    NotLeftLeibniz,
    #[error("algebra is not left central")]
    NotLeftCentral,
    #[error("algebra is not symmetric")]
    NotSymmetric,
    #[error("map does not preserve the bracket on basis pair ({0}, {1})")]
    NotAMorphism(usize, usize),
    #[error("map is not an automorphism")]
    NotAutomorphism,
    #[error("module action does not respect the bracket on basis pair ({0}, {1})")]
    ActionInvalid(usize, usize),
    #[error("subspace is not invariant under the action")]
    NotInvariant,
    #[error("no equivariant projection exists")]
    NoEquivariantProjection,
    #[error("algebra has rank zero")]
    RankZero,
    #[error("expected rank {expected}, found {found}")]
    WrongRank { expected: usize, found: usize },
    #[error("no isotropic vector found over the rationals")]
    NotFoundOverField,
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("invalid quintuple: {0}")]
    InvalidQuintuple(QuintupleViolation),
}

pub type Result<T> = std::result::Result<T, Error>;
