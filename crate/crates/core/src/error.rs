use thiserror::Error;

use crate::polymap::{DegreeWitness, InvariantWitness};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid monoid: {0}")]
    InvalidMonoid(String),

    #[error("finite structure has {size} elements, cap is {cap}")]
    TooLarge { size: usize, cap: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("element does not belong to the domain: {0}")]
    NotInDomain(String),

    #[error("degree of polynomial map is not certified")]
    UncertifiedDegree,

    #[error("incompatible domains: {0}")]
    IncompatibleDomains(String),

    #[error("truncation level {have} too small, need at least {need}")]
    TruncationTooSmall { have: usize, need: usize },

    #[error("simplicial identity fails: {0}")]
    SimplicialIdentity(String),

    #[error("not a chain complex: {0}")]
    NotAComplex(String),

    #[error("normalized chains do not vanish above degree {bound} (nonzero in degree {degree})")]
    NotSkeletal { bound: usize, degree: usize },

    #[error("invalid functor spec `{0}`")]
    FunctorSpec(String),

    #[error("invalid coefficient ring: {0}")]
    Ring(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("degree counterexample: {0}")]
    DegreeCounterexample(Box<DegreeWitness>),

    #[error("map is not invariant under translation: {0}")]
    NotInvariant(Box<InvariantWitness>),

    #[error("not divisible: {0}")]
    NotDivisible(String),
}

impl Error {
    /// True for errors that carry a mathematical counterexample rather than
    /// malformed input.
    pub fn is_counterexample(&self) -> bool {
        matches!(
            self,
            Error::DegreeCounterexample(_) | Error::NotInvariant(_) | Error::NotDivisible(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
