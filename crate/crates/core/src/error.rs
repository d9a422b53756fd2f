use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("parse error at `{path}`: {message}")]
    Parse { path: String, message: String },

    #[error("every source-sink cut contains an arc of infinite capacity")]
    NoFiniteCut,

    #[error("matrix on arc {arc} violates m11 + m22 >= m12 + m21")]
    NotPropertyA { arc: usize },

    #[error("instance is not in the {expected} family (arc {arc} violates it)")]
    ClassificationMismatch { expected: &'static str, arc: usize },

    #[error("instance has {n} vertices but the exact budget is {budget}")]
    BudgetExceeded { n: usize, budget: usize },

    #[error("edge games without a pairwise potential: {edges:?}")]
    NotPotential { edges: Vec<usize> },

    #[error("component-cut solver needs gamma_A = 1 and gamma_B = 0")]
    NotComponentCutCase,

    #[error("no integer x_A lies strictly inside the admissible interval")]
    NoValidXA,

    #[error("vertex set misses hyperedge {edge}")]
    NotATraversal { edge: usize },

    #[error("arithmetic overflow while scaling rationals to integers")]
    Overflow,
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
