use thiserror::Error;

use crate::torus::TorusKnot;

/// Errors raised by the tunnel computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator in {numerator}/0")]
    ZeroDenominator { numerator: String },

    #[error("slope 0 has no reciprocal, so it has no simple slope")]
    ZeroSlope,

    #[error("T({a},{b}) is not a torus knot: parameters must be coprime and not both zero")]
    NotCoprime { a: i64, b: i64 },

    #[error("torus knot parameter out of range: {0}")]
    ParameterOutOfRange(i64),

    #[error("{knot} has no associated matrix: the first parameter must be positive and the second nonzero (normalize first)")]
    NoAssociatedMatrix { knot: TorusKnot },

    #[error("twist count n = 0 gives gamma_0 = rho, which is not a cabling construction")]
    ZeroTwist,

    #[error("{knot} is not normalized (expected T(a,b) with a > b >= 2); run `normalize` first")]
    NotNormalized { knot: TorusKnot },

    #[error("{knot} is a trivial knot; splittings on it are not covered by the coincidence classification")]
    TrivialBase { knot: TorusKnot },

    #[error("torus braid word needs a >= b >= 1, got ({a},{b})")]
    BraidParameters { a: i64, b: i64 },

    #[error("malformed braid word at token {position}: {reason}")]
    BraidParse { position: usize, reason: String },

    #[error("malformed slope `{0}`")]
    SlopeParse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
