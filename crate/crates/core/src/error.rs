use thiserror::Error;

/// Errors produced by vector, braid, diagram, and construction operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vector must have even length 2m with m >= 1, got {0}")]
    BadVectorLength(usize),

    #[error("modulus must be an odd integer >= 3, got {0}")]
    BadModulus(u64),

    #[error("operation requires coefficients in Z, got Z/{0}Z")]
    IntegersRequired(u64),

    #[error("operation requires coefficients in Z/pZ")]
    ModulusRequired,

    #[error("vector is trivial (all entries equal)")]
    TrivialVector,

    #[error("operation requires m >= 2 strings")]
    RequiresMAtLeast2,

    #[error("alternating sum is nonzero")]
    DeltaNonZero,

    #[error("braid generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },

    #[error("braid word on {word} strands applied to vector of length {vector}")]
    StrandMismatch { word: usize, vector: usize },

    #[error("vectors have different lengths {0} and {1}")]
    LengthMismatch(usize, usize),

    #[error("vectors are not in the same orbit: {0}")]
    NotEquivalent(String),

    #[error("search budget exhausted: {0}")]
    BudgetExhausted(String),

    #[error("malformed diagram: {0}")]
    MalformedDiagram(String),

    #[error("coloring is not defined on exactly the arcs of the diagram")]
    ArcMismatch,

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("colorings live on different diagrams or rings")]
    DiagramMismatch,

    #[error("closure arc joins endpoints with unequal colors {0} and {1}")]
    InconsistentSeed(String, String),

    #[error("malformed recipe: {0}")]
    MalformedRecipe(String),

    #[error("boundary vector is trivial, 2-adic data undefined")]
    TrivialBoundary,

    #[error("vector is not realizable: {0}")]
    NotRealizable(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
