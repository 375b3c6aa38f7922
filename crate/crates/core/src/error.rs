use thiserror::Error;

/// Errors raised by the combinatorial and character computations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("invalid subset {0:?}: elements must be positive and strictly increasing")]
    InvalidSubset(Vec<usize>),

    #[error("invalid set family: {0}")]
    InvalidFamily(String),

    #[error("incomparable weights: {left} vs {right}")]
    IncomparableWeights { left: usize, right: usize },

    #[error("cardinality mismatch: {left} vs {right}")]
    CardinalityMismatch { left: usize, right: usize },

    #[error("invalid nu {nu:?} for shape ({m}^{n}): {reason}")]
    InvalidNu {
        m: usize,
        n: usize,
        nu: Vec<usize>,
        reason: String,
    },

    #[error("cannot subtract rectangle of width {width} from {partition:?}")]
    RectangleTooWide { partition: Vec<usize>, width: usize },

    #[error("no well-defined type: conjugate type {0:?} is not weakly decreasing")]
    NoWellDefinedType(Vec<usize>),

    #[error("family is not closed")]
    NotClosed,

    #[error("mixed types: families of types {0:?} and {1:?}")]
    MixedTypes(Vec<usize>, Vec<usize>),

    #[error("mixed shapes: ({0}^{1}) vs ({2}^{3})")]
    MixedShapes(usize, usize, usize, usize),

    #[error("{what} = {value} exceeds guard {limit}; {hint}")]
    GuardExceeded {
        what: &'static str,
        value: u128,
        limit: u128,
        hint: &'static str,
    },

    #[error("m = {0} is even; the Garnir verification applies to odd m only")]
    EvenM(usize),

    #[error("{path}: {message}")]
    Io { path: String, message: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
