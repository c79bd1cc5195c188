use thiserror::Error;

use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown letter `{0}`")]
    UnknownLetter(char),

    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,

    #[error("empty word not allowed here")]
    EmptyWord,

    #[error("`{0}` is not primitive")]
    NotPrimitive(Word),

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("substitution target uses a letter other than the designated pair")]
    ForeignLetter(char),

    #[error("`{word}` is bordered by the base monomial `{base}`")]
    BorderedGenerator { word: Word, base: Word },

    #[error("`{0}` is not a free generator for the base monomial")]
    NotFreeGenerator(Word),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("assembled solution failed its defining identity: {0}")]
    SolutionCheck(String),

    #[error("leading component is not the square of the base monomial")]
    NotASquare,

    #[error("no finite component of degree {degree} after {rounds} rounds of support growth")]
    SeriesComponent { degree: i64, rounds: usize },

    #[error("cutoff {cutoff} cannot certify the positive part of the power {exponent}")]
    CutoffTooHigh { cutoff: i64, exponent: u32 },

    #[error("inputs are algebraically dependent: the commutator vanishes")]
    AlgebraicallyDependent,

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
