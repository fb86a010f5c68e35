use thiserror::Error;

/// Errors surfaced by the exact and series layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot parse {kind} from {input:?}")]
    Parse { kind: &'static str, input: String },

    #[error("series truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("coefficient list is empty")]
    EmptyCoefficients,

    #[error("coefficient list has {given} entries but order {order} admits at most {max}")]
    TooManyCoefficients {
        given: usize,
        order: usize,
        max: usize,
    },

    #[error("series is not invertible: constant term of 1 - f has no inverse")]
    NonInvertible,

    #[error("column sums have a pole at alpha = 1")]
    AlphaPole,

    #[error("beta = 1 leaves the generating function undefined at z = 1")]
    BetaOne,
}

impl Error {
    pub(crate) fn parse(kind: &'static str, input: &str) -> Self {
        Error::Parse {
            kind,
            input: input.to_owned(),
        }
    }
}
