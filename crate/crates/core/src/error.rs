use thiserror::Error;

use crate::number::Rational;
use crate::spectra::StarViolation;

/// Everything that can go wrong in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {input:?} as a rational number: {reason}")]
    Parse { input: String, reason: &'static str },

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("mediant requires positive denominators")]
    NonPositiveDenominator,

    #[error("component {index} is negative ({value})")]
    NegativeComponent { index: usize, value: Rational },

    #[error("components sum to {sum}, expected 1")]
    NotNormalized { sum: Rational },

    #[error("expected {expected} components, got {actual}")]
    WrongLength { expected: usize, actual: usize },

    #[error("a catalyst needs at least one component")]
    EmptyCatalyst,

    #[error("vectors have different lengths ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },

    #[error("vectors have different totals ({left} vs {right})")]
    TotalMismatch { left: Box<Rational>, right: Box<Rational> },

    #[error("catalyst weight p = {p} lies outside [1/2, 1]")]
    ProbabilityOutOfRange { p: Rational },

    #[error("the pair does not satisfy the catalysis precondition: {0}")]
    NotCatalysisCandidate(StarViolation),

    #[error("the transformation is already possible without a catalyst")]
    LoccAlreadyPossible,

    #[error("epsilon triple is inconsistent with the target spectrum")]
    InconsistentEpsilon,

    #[error("degenerate ratio {0}: zero denominator")]
    DegenerateRatio(&'static str),

    #[error("r = {r} lies outside the feasible catalyst interval")]
    OutsideInterval { r: Rational },

    #[error("invalid construction target: {0}")]
    ConstructionDomain(&'static str),

    #[error("mu = {mu} does not yield a valid construction: {reason}")]
    InadmissibleMu { mu: Rational, reason: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;
